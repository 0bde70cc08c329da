"""Tectonic movement of the plates of a thin partition.

Every band of the subdivision outside the diagram (a *plate*) is slid
north by the height of the diagram above it and west by the width of the
diagram to its left.  The image of an outside cell then has, as an outside
cell of the empty partition, the same (arm, leg) it had relative to ``lam``.
For thin partitions the images cover the quadrant, and the cells covered
more than once are matched type-for-type with the internal hooks of ``lam``.

Everything here works on lattice cells: rectangles are half-open row/column
ranges, possibly unbounded to the south or east.
"""

from __future__ import annotations

import math
from bisect import bisect_right
from collections import Counter, defaultdict
from dataclasses import dataclass, field

from .hooks import internal_hooks
from .partition import (
    INTERNAL,
    Cell,
    Partition,
    PartitionError,
    contains,
    hook_stats,
    subdivision,
    thinness_violation,
)
from .report import Report

INF = math.inf


@dataclass(frozen=True, order=True)
class PlateCoord:
    i: int  # column band, west to east
    j: int  # row band, north to south

    def antidiagonal(self, K: int) -> int:
        """1 for the plates touching the diagram corner-to-corner, then outward."""
        return self.i + self.j - K - 1


@dataclass(frozen=True)
class LatticeRect:
    row_lo: int
    row_hi: float
    col_lo: int
    col_hi: float

    @property
    def height(self) -> float:
        return self.row_hi - self.row_lo

    @property
    def width(self) -> float:
        return self.col_hi - self.col_lo

    def shifted(self, north: int, west: int) -> LatticeRect:
        return LatticeRect(self.row_lo - north, self.row_hi - north, self.col_lo - west, self.col_hi - west)

    def intersect(self, other: LatticeRect) -> tuple[float, float]:
        """(width, height) of the overlap; nonpositive means empty."""
        width = min(self.col_hi, other.col_hi) - max(self.col_lo, other.col_lo)
        height = min(self.row_hi, other.row_hi) - max(self.row_lo, other.row_lo)
        return width, height

    def cells(self, limit: int):
        for r in range(max(self.row_lo, 0), int(min(self.row_hi, limit))):
            for c in range(max(self.col_lo, 0), int(min(self.col_hi, limit))):
                yield Cell(r, c)


def _require_plate(lam: Partition, p: PlateCoord) -> None:
    K = subdivision(lam).K
    if not (1 <= p.i <= K + 1 and 1 <= p.j <= K + 1) or p.i + p.j < K + 2:
        raise PartitionError(f"{p} is not a plate of {lam} (K={K})")


def plate_of(lam: Partition, c: Cell) -> PlateCoord:
    if contains(lam, c):
        raise PartitionError(f"{c} lies inside {lam}; tiles are not moved")
    sub = subdivision(lam)
    return PlateCoord(bisect_right(sub.col_edges, c.col), bisect_right(sub.row_edges, c.row))


def plate_rect(lam: Partition, p: PlateCoord) -> LatticeRect:
    _require_plate(lam, p)
    sub = subdivision(lam)
    K = sub.K
    cols, rows = sub.col_edges, sub.row_edges
    return LatticeRect(
        rows[p.j - 1],
        rows[p.j] if p.j <= K else INF,
        cols[p.i - 1],
        cols[p.i] if p.i <= K else INF,
    )


def theta_shift(lam: Partition, p: PlateCoord) -> tuple[int, int]:
    """(north, west) displacement of plate ``p``.

    The diagram above column band ``i`` is ``y_1 + ... + y_{K+1-i}`` tall and
    the diagram left of row band ``j`` is ``x_1 + ... + x_{K+1-j}`` wide.
    """
    _require_plate(lam, p)
    sub = subdivision(lam)
    return sub.row_edges[sub.K + 1 - p.i], sub.col_edges[sub.K + 1 - p.j]


def theta_cell(lam: Partition, c: Cell) -> Cell:
    north, west = theta_shift(lam, plate_of(lam, c))
    return Cell(c.row - north, c.col - west)


def theta_image(lam: Partition, p: PlateCoord) -> LatticeRect:
    return plate_rect(lam, p).shifted(*theta_shift(lam, p))


def direct_intersection(lam: Partition, p: PlateCoord, q: PlateCoord) -> tuple[float, float]:
    return theta_image(lam, p).intersect(theta_image(lam, q))


def has_area(dims: tuple[float, float]) -> bool:
    return dims[0] > 0 and dims[1] > 0


def dims_agree(closed: tuple[float, float], direct: tuple[float, float]) -> bool:
    """Closed forms are exact for overlaps of positive area; otherwise both must lack area."""
    if has_area(direct):
        return closed == direct
    return not has_area(closed)


def _require_thin(lam: Partition) -> None:
    why = thinness_violation(lam)
    if why is not None:
        raise PartitionError(
            f"{lam} is not thin ({why}); use verify_bessenrodt for non-thin partitions"
        )


def intersection_dims(lam: Partition, p: PlateCoord, q: PlateCoord) -> tuple[float, float]:
    """Closed-form (width, height) of the overlap of two moved plates.

    Thinness lets each overlap be read off as "end of the plate that ends
    first minus start of the plate that starts last", where the order of the
    bands decides which is which.  Plates in the same band are offset copies
    of the same width.  The values are exact whenever the overlap has positive
    area; for empty or degenerate overlaps only their non-positivity is
    meaningful (see :func:`dims_agree`).
    """
    _require_thin(lam)
    _require_plate(lam, p)
    _require_plate(lam, q)
    sub = subdivision(lam)
    K = sub.K
    xs = (*sub.x, INF)
    ys = (*sub.y, INF)

    def band_sum(seq, lo, hi):  # 1-based inclusive, empty when hi < lo
        return sum(seq[lo - 1 : hi]) if hi >= lo else 0

    def overlap(seq, a, b, alpha, beta):
        # band a of the first plate (crossing band b), band alpha of the second
        if a == alpha:
            start_a = band_sum(seq, K + 2 - b, a - 1)
            start_b = band_sum(seq, K + 2 - beta, alpha - 1)
            return seq[a - 1] - abs(start_a - start_b)
        if a < alpha:
            return band_sum(seq, K + 2 - b, a) - band_sum(seq, K + 2 - beta, alpha - 1)
        return band_sum(seq, K + 2 - beta, alpha) - band_sum(seq, K + 2 - b, a - 1)

    return overlap(xs, p.i, p.j, q.i, q.j), overlap(ys, p.j, p.i, q.j, q.i)


def tile_plate_pair(K: int, i: int, j: int) -> tuple[PlateCoord, PlateCoord]:
    """The two vertex-sharing plates whose overlap stands in for tile ``(i, j)``."""
    return PlateCoord(K + 2 - j, K + 1 - i), PlateCoord(K + 1 - j, K + 2 - i)


def _overlap_allowed(K: int, p: PlateCoord, q: PlateCoord) -> bool:
    if p.i + p.j == K + 2 and q.i + q.j == K + 2:
        return True
    return p.i + p.j == q.i + q.j and abs(p.i - q.i) == 1


@dataclass
class CoverageReport:
    lam: Partition
    box: int
    safe: int
    multiplicity: dict[Cell, int]
    overlap_cells: list[tuple[Cell, Cell, tuple[int, int]]]
    uncovered: list[Cell]
    type_mismatches: list[dict]
    forbidden_overlaps: list[dict]
    tile_mismatches: list[dict]
    dims_mismatches: list[dict] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not (
            self.uncovered
            or self.type_mismatches
            or self.forbidden_overlaps
            or self.tile_mismatches
            or self.dims_mismatches
        )

    def __bool__(self) -> bool:
        return self.passed

    def grid_rle(self) -> list[list[list[int]]]:
        """Multiplicity grid over the box, each row as ``[value, run]`` pairs."""
        rows = []
        for r in range(self.box):
            runs: list[list[int]] = []
            for c in range(self.box):
                v = self.multiplicity.get(Cell(r, c), 0)
                if runs and runs[-1][0] == v:
                    runs[-1][1] += 1
                else:
                    runs.append([v, 1])
            rows.append(runs)
        return rows

    def heatmap(self, size: int | None = None) -> str:
        """Digits = multiplicity (``+`` above 9), ``.`` = uncovered."""
        n = self.box if size is None else min(size, self.box)
        lines = []
        for r in range(n):
            row = []
            for c in range(n):
                v = self.multiplicity.get(Cell(r, c), 0)
                row.append("." if v == 0 else (str(v) if v < 10 else "+"))
            lines.append("".join(row))
        return "\n".join(lines)

    def to_report(self) -> Report:
        return Report(
            "tectonic",
            {"lambda": self.lam.to_json(), "box": self.box},
            self.passed,
            {
                "safe": self.safe,
                "grid": self.grid_rle(),
                "overlaps": [
                    {"cell": list(cell), "internal": list(inner), "arm": t[0], "leg": t[1]}
                    for cell, inner, t in self.overlap_cells
                ],
                "uncovered": [list(c) for c in self.uncovered],
                "type_mismatches": self.type_mismatches,
                "forbidden_overlaps": self.forbidden_overlaps,
                "tile_mismatches": self.tile_mismatches,
                "dims_mismatches": self.dims_mismatches,
            },
        )


def min_box(lam: Partition) -> int:
    """Smallest box whose safe region holds every internal hook type."""
    return lam.width + len(lam) + max(lam.width, len(lam)) + 1


def verify_thin_bijection(lam: Partition, box: int) -> CoverageReport:
    """Push every outside cell of the ``box``-square through the movement and audit coverage.

    Only the safe square ``[0, box - |x| - |y|)^2`` is audited: any cell there
    has all of its preimages inside the box, since no shift exceeds the
    diagram's extent.
    """
    if not lam:
        raise PartitionError("the empty partition has no plates; nothing moves")
    _require_thin(lam)
    if box < min_box(lam):
        raise PartitionError(f"box {box} too small for {lam}; need at least {min_box(lam)}")
    sub = subdivision(lam)
    K = sub.K
    safe = box - lam.width - len(lam)

    mult: Counter = Counter()
    covering: dict[Cell, list[PlateCoord]] = defaultdict(list)
    for r in range(box):
        for c in range(lam.part(r), box):
            cell = Cell(r, c)
            p = plate_of(lam, cell)
            north, west = theta_shift(lam, p)
            img = Cell(r - north, c - west)
            if img.row < box and img.col < box:
                mult[img] += 1
                covering[img].append(p)

    safe_cells = [Cell(r, c) for r in range(safe) for c in range(safe)]
    uncovered = [c for c in safe_cells if mult[c] == 0]

    leftover = Counter({(c.col, c.row): mult[c] - 1 for c in safe_cells if mult[c] > 1})
    pool: dict[tuple[int, int], list[Cell]] = defaultdict(list)
    for cell, hs in internal_hooks(lam):
        pool[hs.hook_type].append(cell)
    inner_types = Counter({t: len(cells) for t, cells in pool.items()})
    type_mismatches = [
        {"arm": t[0], "leg": t[1], "overlap_count": leftover[t], "internal_count": inner_types[t]}
        for t in sorted(set(leftover) | set(inner_types))
        if leftover[t] != inner_types[t]
    ]

    overlap_cells = []
    forbidden = []
    for cell in safe_cells:
        extra = mult[cell] - 1
        if extra <= 0:
            continue
        plates = sorted(covering[cell])
        for a in range(len(plates)):
            for b in range(a + 1, len(plates)):
                if not _overlap_allowed(K, plates[a], plates[b]):
                    forbidden.append({"cell": list(cell), "plates": [[plates[a].i, plates[a].j], [plates[b].i, plates[b].j]]})
        t = (cell.col, cell.row)
        for _ in range(extra):
            if pool[t]:
                overlap_cells.append((cell, pool[t].pop(0), t))

    tile_mismatches = []
    pair_cover: Counter = Counter()
    for i, j in sub.tiles():
        p, q = tile_plate_pair(K, i, j)
        a, b = theta_image(lam, p), theta_image(lam, q)
        region = LatticeRect(
            max(a.row_lo, b.row_lo), min(a.row_hi, b.row_hi), max(a.col_lo, b.col_lo), min(a.col_hi, b.col_hi)
        )
        got = Counter((c.col, c.row) for c in region.cells(safe))
        pair_cover.update(region.cells(safe))
        tile = LatticeRect(sub.row_edges[j - 1], sub.row_edges[j], sub.col_edges[i - 1], sub.col_edges[i])
        want = Counter(hook_stats(lam, c, INTERNAL).hook_type for c in tile.cells(box))
        if got != want or (region.width, region.height) != (sub.x[i - 1], sub.y[j - 1]):
            tile_mismatches.append(
                {"tile": [i, j], "plates": [[p.i, p.j], [q.i, q.j]], "size": [region.width, region.height]}
            )
    extra_cells = Counter({c: mult[c] - 1 for c in safe_cells if mult[c] > 1})
    if pair_cover != extra_cells:
        tile_mismatches.append({"tile": None, "reason": "pair overlaps do not account for the overlap layer"})

    plates = [PlateCoord(i, j) for i, j in sub.plates()]
    dims_mismatches = []
    for a in range(len(plates)):
        for b in range(a + 1, len(plates)):
            p, q = plates[a], plates[b]
            closed, direct = intersection_dims(lam, p, q), direct_intersection(lam, p, q)
            if not dims_agree(closed, direct):
                dims_mismatches.append(
                    {"plates": [[p.i, p.j], [q.i, q.j]], "closed": _dims_json(closed), "direct": _dims_json(direct)}
                )

    return CoverageReport(
        lam, box, safe, dict(mult), overlap_cells, uncovered, type_mismatches, forbidden, tile_mismatches,
        dims_mismatches,
    )


def _dims_json(dims: tuple[float, float]) -> list:
    return [int(d) if d != INF else "inf" for d in dims]
