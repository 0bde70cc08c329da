"""Internal/external hook enumeration and the hook-type multiset identity.

For every hook type ``(a, l)`` the number of external hooks of ``lam`` of that
type equals one plus the number of internal hooks of that type.
:func:`verify_bessenrodt` checks this count by count up to a hook-length bound.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable

from .partition import (
    EXTERNAL,
    INTERNAL,
    Cell,
    HookStats,
    Partition,
    PartitionError,
    hook_stats,
)
from .report import Report


def internal_hooks(lam: Partition) -> list[tuple[Cell, HookStats]]:
    return [(c, hook_stats(lam, c, INTERNAL)) for c in lam.cells()]


def external_hooks_up_to(lam: Partition, hmax: int) -> list[tuple[Cell, HookStats]]:
    """External hooks with ``hook_len <= hmax``, in row-major order.

    At an outside cell ``(r, c)`` the arm is ``c - lam[r]`` and the leg is
    ``r - lam'[c]``, so a hook of length ``<= hmax`` needs ``c < lam[r] + hmax``
    and ``r < lam'[c] + hmax``; rows below ``len(lam) + hmax`` or columns past
    ``lam[0] + hmax`` can never qualify.
    """
    if hmax < 1:
        raise PartitionError("hmax must be at least 1")
    out = []
    for r in range(len(lam) + hmax):
        for c in range(lam.part(r), lam.part(r) + hmax):
            if c - lam.part(r) + r - lam.column(c) + 1 > hmax:
                continue
            cell = Cell(r, c)
            out.append((cell, hook_stats(lam, cell, EXTERNAL)))
    return out


@dataclass
class HookTypeMultiset:
    bound: int
    counts: Counter = field(default_factory=Counter)

    def __getitem__(self, key: tuple[int, int]) -> int:
        return self.counts.get(key, 0)

    def types(self) -> set[tuple[int, int]]:
        return set(self.counts)

    def lengths(self) -> Counter:
        """Collapse types to hook lengths."""
        out: Counter = Counter()
        for (a, l), n in self.counts.items():
            out[a + l + 1] += n
        return out


def hook_type_multiset(hooks: Iterable[HookStats], bound: int) -> HookTypeMultiset:
    ms = HookTypeMultiset(bound)
    for h in hooks:
        if h.hook_len <= bound:
            ms.counts[h.hook_type] += 1
    return ms


def max_hook_length(lam: Partition) -> int:
    return lam.width + len(lam) - 1 if lam else 0


def verify_bessenrodt(lam: Partition, bound: int) -> Report:
    """Count external hooks of ``lam`` per type against ``1 + #internal``."""
    if bound < 1 or bound < max_hook_length(lam):
        raise PartitionError(
            f"bound {bound} is below the largest internal hook length {max_hook_length(lam)} of {lam}"
        )
    ext = hook_type_multiset((h for _, h in external_hooks_up_to(lam, bound)), bound)
    inner = hook_type_multiset((h for _, h in internal_hooks(lam)), bound)
    failures = []
    for a in range(bound):
        for l in range(bound - a):
            if ext[(a, l)] != 1 + inner[(a, l)]:
                failures.append(
                    {"arm": a, "leg": l, "external_count": ext[(a, l)], "internal_count": inner[(a, l)]}
                )
    return Report(
        "bessenrodt",
        {"lambda": lam.to_json(), "bound": bound},
        not failures,
        {"failures": failures},
    )
