from __future__ import annotations

import math

import pytest

from hookforge.partition import Cell, Partition, PartitionError, is_thin, partitions_up_to, subdivision
from hookforge.tectonic import (
    LatticeRect,
    PlateCoord,
    direct_intersection,
    dims_agree,
    has_area,
    intersection_dims,
    min_box,
    plate_of,
    plate_rect,
    theta_cell,
    theta_shift,
    tile_plate_pair,
    verify_thin_bijection,
)

P = Partition.parse
FIG = P("15,15,15,15,15,15,10,10,10,10,5,5,5,3,3,3")
THIN = P("24,11,5,5,5,1,1,1,1,1,1")


def test_plate_shift_regression():
    assert theta_shift(FIG, PlateCoord(3, 4)) == (10, 3)
    assert plate_of(FIG, Cell(14, 6)) == PlateCoord(3, 4)
    assert theta_cell(FIG, Cell(14, 6)) == Cell(4, 3)


def test_shift_is_extent_north_and_west():
    for lam in (FIG, THIN, P("3,1,1")):
        for r in range(len(lam) + 4):
            for c in range(lam.part(r), lam.width + 4):
                img = theta_cell(lam, Cell(r, c))
                assert img == Cell(r - lam.column(c), c - lam.part(r))


def test_plate_rect_contains_its_cells():
    sub = subdivision(FIG)
    for i, j in sub.plates():
        rect = plate_rect(FIG, PlateCoord(i, j))
        for cell in rect.cells(25):
            assert plate_of(FIG, cell) == PlateCoord(i, j)


def test_lattice_rect_intersection():
    a = LatticeRect(0, 4, 0, 3)
    b = LatticeRect(2, math.inf, 1, 10)
    assert a.intersect(b) == (2, 2)
    assert not has_area(LatticeRect(0, 1, 0, 1).intersect(LatticeRect(5, 6, 5, 6)))


def test_tile_plate_pairs_have_tile_size():
    lam = THIN
    sub = subdivision(lam)
    for i, j in sub.tiles():
        p, q = tile_plate_pair(sub.K, i, j)
        dims = direct_intersection(lam, p, q)
        assert dims == (sub.x[i - 1], sub.y[j - 1])


def test_closed_form_matches_direct_on_positive_area():
    for lam in (THIN, P("3,1,1"), P("7,3,1,1,1")):
        plates = [PlateCoord(i, j) for i, j in subdivision(lam).plates()]
        for p in plates:
            for q in plates:
                if p == q:
                    continue
                closed, direct = intersection_dims(lam, p, q), direct_intersection(lam, p, q)
                assert dims_agree(closed, direct)
                if has_area(direct):
                    assert closed == direct


def test_verify_thin_bijection_examples():
    for lam in (P("1"), P("2,1,1"), THIN):
        rep = verify_thin_bijection(lam, min_box(lam))
        assert rep.passed, rep.to_report().to_json()
    rep = verify_thin_bijection(P("1"), 4)
    # the safe square of a single box: everything covered once except the overlap for the (0, 0) hook
    assert rep.multiplicity[Cell(0, 0)] == 2


def test_small_thin_corpus():
    lams = [lam for lam in partitions_up_to(9) if lam and is_thin(lam)]
    assert all(verify_thin_bijection(lam, min_box(lam)).passed for lam in lams)


def test_refusals():
    with pytest.raises(PartitionError, match="x1\\+x2 = 8 > x3 = 2"):
        verify_thin_bijection(P("12,10,8,8,8,8,8,8,1,1,1"), 40)
    with pytest.raises(PartitionError):
        verify_thin_bijection(P("2,1"), 2)
    with pytest.raises(PartitionError):
        verify_thin_bijection(P(""), 4)
    with pytest.raises(PartitionError):
        intersection_dims(P("3,3,1"), PlateCoord(2, 2), PlateCoord(1, 3))
