"""Hook-to-strip bijection between hooked partitions of different sizes.

An external hook of length ``l`` on ``lam`` (size ``d - l``) is traded for the
border strip with the same two extremal cells; adding the strip gives ``mu``
(size ``d``), where the same two cells are the hand and foot of an internal
hook of length ``l``.  On beads this is a single move: the bead of the
hook's row jumps to the hole of the hook's column.

The extremal cells are literally shared.  Because external hooks point
west/north while internal hooks point east/south, the west end of the
external hook (its hand) is the south end of the internal hook (its foot)
and vice versa.
"""

from __future__ import annotations

from dataclasses import dataclass

from .hooks import external_hooks_up_to
from .maya import move_bead
from .partition import (
    EXTERNAL,
    INTERNAL,
    Cell,
    HookStats,
    Partition,
    PartitionError,
    contains,
    hook_cells,
    hook_stats,
    partitions_of,
)
from .report import Report


@dataclass(frozen=True)
class HookedPartition:
    lam: Partition
    cell: Cell
    side: str

    @property
    def stats(self) -> HookStats:
        return hook_stats(self.lam, self.cell, self.side)

    @property
    def contents(self) -> tuple[int, ...]:
        return tuple(self.stats.contents)

    def sort_key(self):
        return (tuple(-p for p in self.lam.parts), self.cell.row, self.cell.col)

    def to_json(self) -> dict:
        hs = self.stats
        return {
            "lambda": self.lam.to_json(),
            "cell": list(self.cell),
            "side": self.side,
            "arm": hs.arm,
            "leg": hs.leg,
        }


def enumerate_S(d: int, ell: int) -> list[HookedPartition]:
    """Internal hooks of length ``ell`` over all partitions of ``d``."""
    if ell < 1:
        return []
    return [
        HookedPartition(lam, c, INTERNAL)
        for lam in partitions_of(d)
        for c in lam.cells()
        if hook_stats(lam, c, INTERNAL).hook_len == ell
    ]


def enumerate_Sprime(d: int, ell: int) -> list[HookedPartition]:
    """External hooks of length ``ell`` over all partitions of ``d``."""
    if ell < 1:
        return []
    return [
        HookedPartition(lam, c, EXTERNAL)
        for lam in partitions_of(d)
        for c, hs in external_hooks_up_to(lam, ell)
        if hs.hook_len == ell
    ]


def _strip(small: Partition, big: Partition) -> list[Cell]:
    return [c for c in big.cells() if not contains(small, c)]


def _check_strip(small: Partition, big: Partition, ext: HookStats, inner: HookStats) -> None:
    strip = _strip(small, big)
    contents = sorted(c.content for c in strip)
    ends = {ext.hand, ext.foot}
    if (
        len(strip) != ext.hook_len
        or contents != list(ext.contents)
        or not ends <= set(strip)
        or {inner.hand, inner.foot} != ends
        or inner.hook_type != ext.hook_type
    ):
        raise PartitionError(
            f"strip between {small} and {big} does not match hooks {ext} / {inner}"
        )


def to_internal(hp: HookedPartition) -> HookedPartition:
    if hp.side != EXTERNAL:
        raise PartitionError("to_internal expects an external hook")
    lam, (r, c) = hp.lam, hp.cell
    ext = hp.stats
    # bead of row r sits just left of content lam[r]-r; hole of column c sits at content c-lam'[c]
    mu = move_bead(lam, lam.part(r) - r - 1, c - lam.column(c))
    out = HookedPartition(mu, Cell(lam.column(c), lam.part(r)), INTERNAL)
    _check_strip(lam, mu, ext, out.stats)
    return out


def to_external(hp: HookedPartition) -> HookedPartition:
    if hp.side != INTERNAL:
        raise PartitionError("to_external expects an internal hook")
    mu, (a, b) = hp.lam, hp.cell
    inner = hp.stats
    lam = move_bead(mu, mu.part(a) - a - 1, b - mu.column(b))
    out = HookedPartition(lam, Cell(mu.column(b) - 1, mu.part(a) - 1), EXTERNAL)
    _check_strip(lam, mu, out.stats, inner)
    return out


def _preservation_failures(ext: HookedPartition, inner: HookedPartition) -> list[str]:
    e, i = ext.stats, inner.stats
    bad = []
    if {e.hand, e.foot} != {i.hand, i.foot}:
        bad.append("hand_foot")
    if set(c.content for c in hook_cells(ext.lam, ext.cell, EXTERNAL)) != set(
        c.content for c in hook_cells(inner.lam, inner.cell, INTERNAL)
    ):
        bad.append("content_set")
    if e.hook_type != i.hook_type:
        bad.append("hook_type")
    if inner.lam.size != ext.lam.size + e.hook_len:
        bad.append("size")
    return bad


def verify_hook_strip(d: int, ell: int) -> Report:
    if not d >= ell >= 1:
        raise PartitionError(f"need d >= ell >= 1, got d={d}, ell={ell}")
    S = enumerate_S(d, ell)
    Sp = enumerate_Sprime(d - ell, ell)
    counterexamples = []
    images = {}
    for src in Sp:
        try:
            img = to_internal(src)
        except PartitionError as exc:
            counterexamples.append({"predicate": "strip", "source": src.to_json(), "error": str(exc)})
            continue
        for pred in _preservation_failures(src, img):
            counterexamples.append({"predicate": pred, "source": src.to_json(), "image": img.to_json()})
        if img in images:
            counterexamples.append({"predicate": "injective", "source": src.to_json(), "image": img.to_json()})
        images[img] = src
    target = set(S)
    for missing in sorted(target - set(images), key=HookedPartition.sort_key):
        counterexamples.append({"predicate": "surjective", "image": missing.to_json()})
    for stray in sorted(set(images) - target, key=HookedPartition.sort_key):
        counterexamples.append({"predicate": "codomain", "image": stray.to_json()})
    for tgt in S:
        try:
            back = to_external(tgt)
        except PartitionError as exc:
            counterexamples.append({"predicate": "strip", "source": tgt.to_json(), "error": str(exc)})
            continue
        if images.get(tgt) != back:
            counterexamples.append({"predicate": "inverse", "source": tgt.to_json(), "image": back.to_json()})
    return Report(
        "hookstrip",
        {"d": d, "ell": ell},
        not counterexamples,
        {"size_S": len(S), "size_Sprime": len(Sp), "counterexamples": counterexamples},
    )
