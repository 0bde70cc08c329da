"""Reverse and skew plane partitions by exhaustive enumeration.

A reverse plane partition (RPP) of shape ``lam`` fills the cells of ``lam``
with nonnegative integers weakly increasing along rows and down columns.  A
skew plane partition (SPP) fills the complement of ``lam`` with finitely many
nonzero entries, weakly decreasing along rows and down columns.  Zero entries
are never stored.

:func:`hg_decompose` / :func:`hg_compose` implement the Hillman-Grassl
correspondence between RPPs and multisets of hooks of ``lam``.
"""

from __future__ import annotations

from collections import Counter
from functools import lru_cache
from dataclasses import dataclass
from typing import Iterator, Mapping

from .partition import INTERNAL, Cell, Partition, PartitionError, contains, hook_stats

RPP = "rpp"
SPP = "spp"


@dataclass(frozen=True)
class Filling:
    shape: Partition
    side: str
    entries: tuple[tuple[Cell, int], ...]

    @classmethod
    def from_mapping(cls, shape: Partition, side: str, values: Mapping[Cell, int]) -> Filling:
        return cls(shape, side, tuple(sorted((c, v) for c, v in values.items() if v)))

    def as_dict(self) -> dict[Cell, int]:
        return dict(self.entries)

    def get(self, c: Cell) -> int:
        return self.as_dict().get(c, 0)

    @property
    def size(self) -> int:
        return sum(v for _, v in self.entries)

    def content_weight(self) -> Counter:
        """Exponent of ``q_k`` in the multivariate weight, for each content ``k``."""
        w: Counter = Counter()
        for c, v in self.entries:
            w[c.content] += v
        return w

    def to_json(self) -> dict:
        return {
            "shape": self.shape.to_json(),
            "side": self.side,
            "entries": [[c.row, c.col, v] for c, v in self.entries],
        }


def is_valid(f: Filling) -> bool:
    vals = f.as_dict()
    for c, v in f.entries:
        if v <= 0:
            return False
        if (f.side == RPP) != contains(f.shape, c):
            return False
    for c, v in vals.items():
        for nb in (Cell(c.row + 1, c.col), Cell(c.row, c.col + 1)):
            w = vals.get(nb, 0)
            if f.side == RPP and contains(f.shape, nb) and w < v:
                return False
            if f.side == SPP and w > v:
                return False
    return True


def rpp_enumerate(lam: Partition, N: int) -> Iterator[Filling]:
    """Every RPP of shape ``lam`` with size ``<= N``, lexicographically by entry vector."""
    cells = list(lam.cells())
    vals: dict[Cell, int] = {}

    def rec(k: int, budget: int) -> Iterator[Filling]:
        if k == len(cells):
            yield Filling.from_mapping(lam, RPP, vals)
            return
        c = cells[k]
        lo = max(vals.get(Cell(c.row - 1, c.col), 0), vals.get(Cell(c.row, c.col - 1), 0))
        for v in range(lo, N + 1):
            # every cell weakly south-east of c is at least v
            if v * _forced_below(lam, c) > budget:
                break
            vals[c] = v
            yield from rec(k + 1, budget - v)
        vals.pop(c, None)

    yield from rec(0, N)


def _forced_below(lam: Partition, c: Cell) -> int:
    """Number of cells of ``lam`` weakly south-east of ``c``."""
    return sum(max(0, lam.part(r) - c.col) for r in range(c.row, len(lam)))


def spp_support(lam: Partition, N: int, box: int | None = None) -> list[Cell]:
    """Outside cells that can be nonzero in an SPP of size ``<= N``.

    A nonzero entry at ``(i, j)`` forces nonzero entries on every outside cell
    of ``[0, i] x [0, j]``; cells forcing more than ``N`` of them stay zero.
    """
    out = []
    for r in range(len(lam) + N):
        for c in range(lam.part(r), lam.part(r) + N):
            if box is not None and (r >= box or c >= box):
                break
            forced = sum(max(0, c + 1 - lam.part(rr)) for rr in range(r + 1))
            if forced > N:
                break
            out.append(Cell(r, c))
    return sorted(out)


def spp_enumerate(lam: Partition, N: int, box: int | None = None) -> Iterator[Filling]:
    """Every SPP of shape ``lam`` with size ``<= N`` (optionally supported in ``[0, box)^2``)."""
    cells = spp_support(lam, N, box)
    vals: dict[Cell, int] = {}

    def bound(c: Cell) -> int:
        b = N
        for nb in (Cell(c.row - 1, c.col), Cell(c.row, c.col - 1)):
            if nb.row >= 0 and nb.col >= 0 and not contains(lam, nb):
                b = min(b, vals.get(nb, 0))
        return b

    def rec(k: int, budget: int) -> Iterator[Filling]:
        if k == len(cells):
            yield Filling.from_mapping(lam, SPP, vals)
            return
        c = cells[k]
        for v in range(0, min(bound(c), budget) + 1):
            vals[c] = v
            yield from rec(k + 1, budget - v)
        vals.pop(c, None)

    yield from rec(0, N)


@dataclass(frozen=True)
class HookMultiplicity:
    """How many copies of each hook of ``shape`` a filling decomposes into."""

    shape: Partition
    mult: tuple[tuple[Cell, int], ...]

    def as_dict(self) -> dict[Cell, int]:
        return dict(self.mult)

    @property
    def size(self) -> int:
        return sum(n * hook_stats(self.shape, c, INTERNAL).hook_len for c, n in self.mult)


def _hg_path(lam: Partition, vals: dict[Cell, int]) -> tuple[Cell, list[Cell]]:
    """Zigzag path of one Hillman-Grassl step and the hook cell it records.

    Start at the bottom of the leftmost column holding a nonzero entry; go
    north while the entry above is equal, otherwise east; stop at the row end.
    """
    col = min(c.col for c, v in vals.items() if v)
    r, c = lam.column(col) - 1, col
    path = [Cell(r, c)]
    while True:
        if r > 0 and vals.get(Cell(r - 1, c), 0) == vals.get(Cell(r, c), 0):
            r -= 1
        elif c + 1 < lam.part(r):
            c += 1
        else:
            break
        path.append(Cell(r, c))
    return Cell(r, col), path


def hg_decompose(f: Filling) -> HookMultiplicity:
    if f.side != RPP:
        raise PartitionError("Hillman-Grassl applies to reverse plane partitions")
    lam = f.shape
    vals = f.as_dict()
    mult: Counter = Counter()
    while any(vals.values()):
        hook, path = _hg_path(lam, vals)
        for c in path:
            vals[c] -= 1
        mult[hook] += 1
    return HookMultiplicity(lam, tuple(sorted(mult.items())))


def hg_compose(hm: HookMultiplicity) -> Filling:
    """Inverse of :func:`hg_decompose`.

    Hooks are re-inserted in the reverse of the order in which the forward
    pass removes them.  The forward pass sweeps columns left to right and,
    within a column, records rows from the bottom up; so insertion goes
    columns right to left and rows top down.  Each reverse path starts at the hook's hand,
    steps south while the entry below is equal, otherwise west, and runs down
    the hook's column to its foot.
    """
    lam = hm.shape
    vals: dict[Cell, int] = {}
    order = sorted(hm.mult, key=lambda cn: (-cn[0].col, cn[0].row))
    for hook, n in order:
        if not contains(lam, hook):
            raise PartitionError(f"{hook} is not a cell of {lam}")
        for _ in range(n):
            r, c = hook.row, lam.part(hook.row) - 1
            path = [Cell(r, c)]
            while (r, c) != (lam.column(hook.col) - 1, hook.col):
                below = Cell(r + 1, c)
                if c == hook.col or (contains(lam, below) and vals.get(below, 0) == vals.get(Cell(r, c), 0)):
                    r += 1
                else:
                    c -= 1
                path.append(Cell(r, c))
            for cell in path:
                vals[cell] = vals.get(cell, 0) + 1
    return Filling.from_mapping(lam, RPP, vals)


def refined_weight(f: Filling) -> tuple[int, int]:
    """``(q, t)`` exponents: size, and the sum of ``leg - arm - 1`` over the recorded hooks."""
    hm = hg_decompose(f)
    t = 0
    for c, n in hm.mult:
        hs = hook_stats(f.shape, c, INTERNAL)
        t += n * (hs.leg - hs.arm - 1)
    return hm.size, t


def dualize(lam: Partition, N: int) -> Partition:
    """Complement of ``lam`` in the ``N x N`` box, rotated by a half turn."""
    if lam.width > N or len(lam) > N:
        raise PartitionError(f"{lam} does not fit in the {N}x{N} box")
    return Partition(tuple(p for p in (N - lam.part(N - 1 - i) for i in range(N)) if p > 0))


def dual_cell(c: Cell, N: int) -> Cell:
    return Cell(N - 1 - c.row, N - 1 - c.col)


def plane_partition_counts_by_rows(n: int) -> list[int]:
    """Plane partitions of each size ``0..n``, built row by row.

    A plane partition is a finite sequence of nonempty partitions, each
    contained cell-wise in the one above.  Counted directly on that
    description, without any filling enumerator.
    """
    def below(parent: tuple[int, ...], budget: int):
        """Nonempty partitions fitting under ``parent`` with size <= budget."""
        out = []

        def rec(k: int, cap: int, left: int, acc: list[int]):
            if acc:
                out.append(tuple(acc))
            if k == len(parent):
                return
            for v in range(1, min(cap, parent[k], left) + 1):
                acc.append(v)
                rec(k + 1, v, left - v, acc)
                acc.pop()

        rec(0, budget, budget, [])
        return out

    @lru_cache(maxsize=None)
    def tails(parent: tuple[int, ...], budget: int) -> tuple[int, ...]:
        counts = [0] * (budget + 1)
        counts[0] = 1
        for row in below(parent, budget):
            s = sum(row)
            for m, c in enumerate(tails(row, budget - s)):
                counts[s + m] += c
        return tuple(counts)

    return list(tails((n,) * n, n)) if n else [1]


def plane_partition_counts_by_recurrence(n: int) -> list[int]:
    """MacMahon numbers via ``k PL(k) = sum_{j=1..k} sigma_2(j) PL(k - j)``."""
    sigma2 = [0] + [sum(d * d for d in range(1, j + 1) if j % d == 0) for j in range(1, n + 1)]
    pl = [1]
    for k in range(1, n + 1):
        total = sum(sigma2[j] * pl[k - j] for j in range(1, k + 1))
        pl.append(total // k)
    return pl
