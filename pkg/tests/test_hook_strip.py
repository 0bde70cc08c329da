from __future__ import annotations

import pytest
from conftest import partitions
from hypothesis import given

from hookforge.hook_strip import (
    HookedPartition,
    enumerate_S,
    enumerate_Sprime,
    to_external,
    to_internal,
    verify_hook_strip,
)
from hookforge.maya import beads, from_beads, move_bead
from hookforge.partition import EXTERNAL, INTERNAL, Cell, Partition, PartitionError

P = Partition.parse


@given(partitions(), partitions(max_size=3))
def test_beads_round_trip(lam, pad):
    depth = len(lam) + len(pad)
    for charge in (-2, 0, 3):
        assert from_beads(beads(lam, depth, charge), charge) == lam


def test_bead_examples():
    assert beads(P("2,1"), 3) == [1, -1, -3]
    assert move_bead(P(""), -1, 0) == P("1")
    with pytest.raises(PartitionError):
        move_bead(P("1"), -1, 0)  # 0 already holds a bead
    with pytest.raises(PartitionError):
        from_beads([3, -5])  # below the packed tail


def test_worked_example():
    src = HookedPartition(P("6,4,3,3,1,1,1"), Cell(4, 4), EXTERNAL)
    img = to_internal(src)
    assert img == HookedPartition(P("6,5,5,4,4,1,1"), Cell(1, 1), INTERNAL)
    assert img.stats.hook_len == 7 and img.stats.hook_type == src.stats.hook_type == (3, 3)
    assert to_external(img) == src
    assert {src.stats.hand, src.stats.foot} == {img.stats.hand, img.stats.foot}


def test_small_sets():
    assert len(enumerate_S(3, 3)) == 3
    assert [(h.lam.parts, tuple(h.cell)) for h in enumerate_S(2, 1)] == [((2,), (0, 1)), ((1, 1), (1, 0))]
    assert sorted(tuple(h.cell) for h in enumerate_Sprime(1, 1)) == [(0, 1), (1, 0)]
    assert to_internal(HookedPartition(P("1"), Cell(0, 1), EXTERNAL)) == HookedPartition(P("2"), Cell(0, 1), INTERNAL)
    assert enumerate_S(3, 0) == []


@pytest.mark.parametrize("d", range(1, 9))
def test_bijection_small(d):
    for ell in range(1, d + 1):
        rep = verify_hook_strip(d, ell)
        assert rep.passed, rep.detail["counterexamples"][:3]
        assert rep.detail["size_S"] == rep.detail["size_Sprime"]


def test_rejects_bad_parameters():
    with pytest.raises(PartitionError):
        verify_hook_strip(2, 3)
    with pytest.raises(PartitionError):
        to_internal(HookedPartition(P("1"), Cell(0, 0), INTERNAL))


def test_single_box_and_empty_shape():
    empty = HookedPartition(P(""), Cell(0, 0), EXTERNAL)
    box = HookedPartition(P("1"), Cell(0, 0), INTERNAL)
    assert to_internal(empty) == box and to_external(box) == empty
    for ell in range(1, 7):
        assert len(enumerate_Sprime(0, ell)) == ell


def test_full_length_hooks_live_on_hook_shapes():
    for d in range(1, 9):
        for h in enumerate_S(d, d):
            assert h.cell == Cell(0, 0)
            assert all(p == 1 for p in h.lam.parts[1:])


def test_round_trip_on_length_three_hooks():
    for h in enumerate_S(6, 3):
        assert to_internal(to_external(h)) == h
