from __future__ import annotations

import pytest
from conftest import partitions
from hypothesis import given

from hookforge.partition import (
    EXTERNAL,
    INTERNAL,
    Cell,
    Partition,
    PartitionError,
    contains,
    hook_cells,
    hook_stats,
    is_thin,
    partitions_of,
    partitions_up_to,
    subdivision,
    thinness_violation,
)

P = Partition.parse


def test_parse_and_basic_shape():
    lam = P("8,4,3,2,2")
    assert lam.parts == (8, 4, 3, 2, 2)
    assert (lam.size, lam.width, len(lam)) == (19, 8, 5)
    assert P("") == Partition(())
    assert P("3,1").conjugate == P("2,1,1")
    assert list(P("2,1").cells()) == [Cell(0, 0), Cell(0, 1), Cell(1, 0)]


@pytest.mark.parametrize("text", ["2,3", "a", "1,-1", "0,1"])
def test_parse_rejects(text):
    with pytest.raises(PartitionError):
        P(text)


def test_partition_counts():
    # p(n) by brute force over compositions would be slow; these are the classical values
    assert [sum(1 for _ in partitions_of(n)) for n in range(13)] == [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77]
    assert list(partitions_of(4)) == [P("4"), P("3,1"), P("2,2"), P("2,1,1"), P("1,1,1,1")]
    assert sum(1 for _ in partitions_up_to(6)) == sum([1, 1, 2, 3, 5, 7, 11])


@given(partitions())
def test_conjugate_involution(lam):
    assert lam.conjugate.conjugate == lam
    assert lam.conjugate.size == lam.size


@given(partitions())
def test_internal_hooks_are_intervals(lam):
    for c in lam.cells():
        hs = hook_stats(lam, c, INTERNAL)
        cells = hook_cells(lam, c, INTERNAL)
        assert len(cells) == hs.hook_len == hs.arm + hs.leg + 1
        assert sorted(x.content for x in cells) == list(hs.contents)
        assert hs.hand == Cell(c.row, c.col + hs.arm) and hs.foot == Cell(c.row + hs.leg, c.col)
        assert all(contains(lam, x) for x in cells)


@given(partitions(max_size=8))
def test_external_hooks_are_intervals(lam):
    for r in range(len(lam) + 3):
        for c in range(lam.part(r), lam.part(r) + 3):
            cell = Cell(r, c)
            hs = hook_stats(lam, cell, EXTERNAL)
            cells = hook_cells(lam, cell, EXTERNAL)
            assert len(cells) == hs.hook_len
            assert sorted(x.content for x in cells) == list(hs.contents)
            assert not any(contains(lam, x) for x in cells)


def test_hook_examples():
    hs = hook_stats(P("8,4,3,2,2"), Cell(1, 1), INTERNAL)
    assert (hs.arm, hs.leg, list(hs.contents)) == (2, 3, [-3, -2, -1, 0, 1, 2])
    hs = hook_stats(P(""), Cell(1, 2), EXTERNAL)
    assert (hs.arm, hs.leg, list(hs.contents)) == (2, 1, [-1, 0, 1, 2])
    hs = hook_stats(P("6,4,3,3,1,1,1"), Cell(4, 4), EXTERNAL)
    assert (hs.arm, hs.leg, hs.hook_len) == (3, 3, 7)


def test_side_mismatch():
    with pytest.raises(PartitionError):
        hook_stats(P("2,1"), Cell(0, 0), EXTERNAL)
    with pytest.raises(PartitionError):
        hook_stats(P("2,1"), Cell(1, 1), INTERNAL)


def test_subdivision_of_plate_example():
    lam = P("15,15,15,15,15,15,10,10,10,10,5,5,5,3,3,3")
    sub = subdivision(lam)
    assert (sub.x, sub.y, sub.K) == ((3, 2, 5, 5), (6, 4, 3, 3), 4)
    assert sub.col_edges == (0, 3, 5, 10, 15)
    assert sub.row_edges == (0, 6, 10, 13, 16)
    assert sub.is_tile(1, 1) and sub.is_tile(1, 4) and not sub.is_tile(2, 4)


def test_thinness_examples():
    assert thinness_violation(P("24,11,5,5,5,1,1,1,1,1,1")) is None
    assert thinness_violation(P("12,10,8,8,8,8,8,8,1,1,1")) == "x1+x2 = 8 > x3 = 2"
    assert is_thin(P("1")) and is_thin(P("3,1,1"))
    assert not is_thin(P("3,3,1"))  # y = (2, 1)
    with pytest.raises(PartitionError):
        subdivision(P(""))
