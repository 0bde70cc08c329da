"""Partitions, cells, hooks and the distinct-part band subdivision.

Cells use matrix orientation: ``Cell(row, col)`` with rows growing south and
columns growing east.  A cell ``(i, j)`` lies in the diagram of ``lam`` iff
``j < lam[i]``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache
from itertools import accumulate
from typing import Iterator, Sequence

INTERNAL = "internal"
EXTERNAL = "external"


class PartitionError(ValueError):
    """Raised on malformed partitions or violated preconditions."""


@dataclass(frozen=True, order=True)
class Cell:
    row: int
    col: int

    @property
    def content(self) -> int:
        return self.col - self.row

    @property
    def cocontent(self) -> int:
        return self.col + self.row

    def __iter__(self):
        yield self.row
        yield self.col


@dataclass(frozen=True)
class Partition:
    """A weakly decreasing tuple of positive parts."""

    parts: tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        if any(p <= 0 for p in parts):
            raise PartitionError(f"parts must be positive: {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise PartitionError(f"parts must be weakly decreasing: {parts}")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def parse(cls, text: str) -> Partition:
        """Parse the comma-separated textual form; the empty string is the empty partition."""
        text = text.strip()
        if not text:
            return cls(())
        try:
            return cls(tuple(int(tok) for tok in text.split(",")))
        except ValueError as exc:
            raise PartitionError(f"cannot parse partition {text!r}: {exc}") from None

    def __str__(self) -> str:
        return ",".join(map(str, self.parts))

    def __repr__(self) -> str:
        return f"Partition({self.parts})"

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __bool__(self) -> bool:
        return bool(self.parts)

    def part(self, row: int) -> int:
        """Row length, zero beyond the last part."""
        return self.parts[row] if 0 <= row < len(self.parts) else 0

    @property
    def size(self) -> int:
        return sum(self.parts)

    @property
    def width(self) -> int:
        return self.parts[0] if self.parts else 0

    @cached_property
    def conjugate(self) -> Partition:
        return Partition(
            tuple(sum(1 for p in self.parts if p > k) for k in range(self.width))
        )

    def column(self, col: int) -> int:
        """Column length, zero beyond the first row."""
        return self.conjugate.part(col)

    def cells(self) -> Iterator[Cell]:
        for i, p in enumerate(self.parts):
            for j in range(p):
                yield Cell(i, j)

    def to_json(self) -> list[int]:
        return list(self.parts)


def as_partition(lam: Partition | Sequence[int]) -> Partition:
    return lam if isinstance(lam, Partition) else Partition(tuple(lam))


def contains(lam: Partition, c: Cell) -> bool:
    return c.row >= 0 and c.col >= 0 and c.col < lam.part(c.row)


def conjugate(lam: Partition) -> Partition:
    return lam.conjugate


@dataclass(frozen=True)
class HookStats:
    side: str
    arm: int
    leg: int
    hand: Cell
    foot: Cell

    @property
    def hook_len(self) -> int:
        return self.arm + self.leg + 1

    @property
    def hook_type(self) -> tuple[int, int]:
        return (self.arm, self.leg)

    @property
    def content_lo(self) -> int:
        # internal: foot is south-west; external: hand is west-most
        return self.foot.content if self.side == INTERNAL else self.hand.content

    @property
    def content_hi(self) -> int:
        return self.hand.content if self.side == INTERNAL else self.foot.content

    @property
    def contents(self) -> range:
        return range(self.content_lo, self.content_hi + 1)


def hook_stats(lam: Partition, c: Cell, side: str) -> HookStats:
    """Arm, leg, hand and foot of the hook at ``c``.

    Internal hooks point east/south inside ``lam``; external hooks point
    west/north through the complement of ``lam``.
    """
    inside = contains(lam, c)
    if side == INTERNAL:
        if not inside:
            raise PartitionError(f"{c} is not a cell of {lam}; no internal hook")
        arm = lam.part(c.row) - c.col - 1
        leg = lam.column(c.col) - c.row - 1
        return HookStats(side, arm, leg, Cell(c.row, c.col + arm), Cell(c.row + leg, c.col))
    if side == EXTERNAL:
        if inside or c.row < 0 or c.col < 0:
            raise PartitionError(f"{c} is not outside {lam}; no external hook")
        # the complement is up-closed, so the outside cells of row/column form a ray
        arm = c.col - lam.part(c.row)
        leg = c.row - lam.column(c.col)
        return HookStats(side, arm, leg, Cell(c.row, c.col - arm), Cell(c.row - leg, c.col))
    raise PartitionError(f"unknown hook side {side!r}")


def hook_cells(lam: Partition, c: Cell, side: str) -> list[Cell]:
    """Explicit cell set of a hook, corner first."""
    hs = hook_stats(lam, c, side)
    if side == INTERNAL:
        arm = [Cell(c.row, c.col + k) for k in range(1, hs.arm + 1)]
        leg = [Cell(c.row + k, c.col) for k in range(1, hs.leg + 1)]
    else:
        arm = [Cell(c.row, c.col - k) for k in range(1, hs.arm + 1)]
        leg = [Cell(c.row - k, c.col) for k in range(1, hs.leg + 1)]
    return [c, *arm, *leg]


def partitions_of(d: int, max_part: int | None = None) -> Iterator[Partition]:
    """All partitions of ``d`` in reverse-lexicographic order of parts."""
    if d < 0:
        return
    if max_part is None:
        max_part = d

    def rec(n: int, cap: int, prefix: list[int]) -> Iterator[tuple[int, ...]]:
        if n == 0:
            yield tuple(prefix)
            return
        for p in range(min(n, cap), 0, -1):
            prefix.append(p)
            yield from rec(n - p, p, prefix)
            prefix.pop()

    for parts in rec(d, max_part, []):
        yield Partition(parts)


def partitions_up_to(n: int) -> Iterator[Partition]:
    for d in range(n + 1):
        yield from partitions_of(d)


@dataclass(frozen=True)
class Subdivision:
    """Band structure cut out by prolonging the boundary segments of a diagram.

    ``x[k]`` is the width of column band ``k+1`` (west to east) and ``y[k]`` the
    height of row band ``k+1`` (north to south).  Band ``(i, j)`` (column band
    ``i``, row band ``j``, both 1-based up to ``K+1``) is a tile of the diagram
    iff ``i + j <= K + 1``; otherwise it is a plate.
    """

    x: tuple[int, ...]
    y: tuple[int, ...]

    @property
    def K(self) -> int:
        return len(self.x)

    @cached_property
    def col_edges(self) -> tuple[int, ...]:
        """Partial sums ``0, x1, x1+x2, ..., sum(x)``."""
        return (0, *accumulate(self.x))

    @cached_property
    def row_edges(self) -> tuple[int, ...]:
        return (0, *accumulate(self.y))

    def is_tile(self, i: int, j: int) -> bool:
        return i + j <= self.K + 1

    def tiles(self) -> list[tuple[int, int]]:
        k1 = self.K + 1
        return [(i, j) for i in range(1, k1 + 1) for j in range(1, k1 + 1) if i + j <= k1]

    def plates(self) -> list[tuple[int, int]]:
        k1 = self.K + 1
        return [(i, j) for i in range(1, k1 + 1) for j in range(1, k1 + 1) if i + j > k1]


@lru_cache(maxsize=4096)
def subdivision(lam: Partition) -> Subdivision:
    if not lam:
        raise PartitionError("the empty partition has no band subdivision")
    distinct = sorted(set(lam.parts))
    x = tuple(b - a for a, b in zip([0, *distinct], distinct))
    y = tuple(lam.parts.count(p) for p in reversed(distinct))
    return Subdivision(x, y)


def thinness_violation(lam: Partition) -> str | None:
    """Describe the first failed thinness inequality, or None if ``lam`` is thin."""
    if not lam:
        return None
    sub = subdivision(lam)
    for name, seq in (("x", sub.x), ("y", sub.y)):
        total = 0
        for n in range(1, len(seq)):
            total += seq[n - 1]
            if total > seq[n]:
                lhs = "+".join(f"{name}{k}" for k in range(1, n + 1))
                return f"{lhs} = {total} > {name}{n + 1} = {seq[n]}"
    return None


def is_thin(lam: Partition) -> bool:
    return thinness_violation(lam) is None
