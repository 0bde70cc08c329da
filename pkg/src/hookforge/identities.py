"""Checkers for the product identities over hooks.

Each ``verify_*`` function builds both sides as truncated series and compares
them coefficient by coefficient.  Only hooks with ``hook_len <= cap`` enter a
product: any longer factor is ``1`` modulo the cap.
"""

from __future__ import annotations

from collections import Counter

from .hook_strip import enumerate_S, enumerate_Sprime
from .hooks import external_hooks_up_to, internal_hooks
from .partition import EXTERNAL, INTERNAL, Cell, HookStats, Partition, hook_stats, partitions_of
from .plane_partitions import (
    hg_compose,
    hg_decompose,
    plane_partition_counts_by_recurrence,
    plane_partition_counts_by_rows,
    refined_weight,
    rpp_enumerate,
    spp_enumerate,
)
from .report import Report
from .series import BivarSeries, ContentMonomial, QTSeries, SeriesError, TruncSeries, geom_log

MAX_DIFFS = 10


def hook_monomial(lam: Partition, c: Cell, side: str) -> ContentMonomial:
    """Product of ``q_k`` over the contents ``k`` of the hook at ``c``."""
    hs = hook_stats(lam, c, side)
    return ContentMonomial.interval(hs.content_lo, hs.content_hi)


def geom_expand(m, cap: int):
    """``1/(1 - m)`` truncated at ``cap``; ``m`` is a content or ``(x, y)`` monomial."""
    if isinstance(m, ContentMonomial):
        return TruncSeries.geom(m, cap)
    return BivarSeries.geom(tuple(m), cap)


def xy_monomial(hs: HookStats) -> tuple[int, int]:
    """``x^(arm+1) y^leg`` for a hook."""
    return (hs.arm + 1, hs.leg)


def _diff(lhs, rhs) -> list[dict]:
    keys = sorted(set(lhs.terms) | set(rhs.terms), key=lambda k: (lhs._deg(k), k))
    out = []
    for k in keys:
        a, b = lhs.coefficient(k), rhs.coefficient(k)
        if a != b:
            out.append({"monomial": str(k) if isinstance(k, ContentMonomial) else list(k), "lhs": a, "rhs": b})
            if len(out) == MAX_DIFFS:
                break
    return out


def _compare(kind: str, params: dict, lhs, rhs, **extra) -> Report:
    diffs = _diff(lhs, rhs)
    ok = not diffs and all(v for k, v in extra.items() if k.startswith("ok_"))
    detail = {"terms": len(lhs.terms), "diffs": diffs}
    detail.update({k: v for k, v in extra.items()})
    return Report(kind, params, ok, detail)


def _content_series(fillings, cap: int) -> TruncSeries:
    acc: Counter = Counter()
    for f in fillings:
        acc[ContentMonomial.from_counts(f.content_weight())] += 1
    return TruncSeries(cap, acc)


def hook_product(lam: Partition, cap: int, side: str) -> TruncSeries:
    """``prod 1/(1 - p_h)`` over the internal or external hooks of ``lam`` with length ``<= cap``."""
    if side == INTERNAL:
        cells = [c for c, hs in internal_hooks(lam) if hs.hook_len <= cap]
    else:
        cells = [c for c, _ in external_hooks_up_to(lam, cap)] if cap else []
    return TruncSeries.geom_product((hook_monomial(lam, c, side) for c in cells), cap)


def gansner_sides(lam: Partition, cap: int) -> tuple[TruncSeries, TruncSeries]:
    return _content_series(rpp_enumerate(lam, cap), cap), hook_product(lam, cap, INTERNAL)


def verify_gansner(lam: Partition, cap: int) -> Report:
    lhs, rhs = gansner_sides(lam, cap)
    return _compare("gansner", {"lambda": lam.to_json(), "cap": cap}, lhs, rhs)


def skew_sides(lam: Partition, cap: int) -> tuple[TruncSeries, TruncSeries]:
    return _content_series(spp_enumerate(lam, cap), cap), hook_product(lam, cap, EXTERNAL)


def verify_skew(lam: Partition, cap: int) -> Report:
    lhs, rhs = skew_sides(lam, cap)
    extra: dict = {}
    if not lam:
        graded = lhs.graded_totals()
        rows = plane_partition_counts_by_rows(cap)
        rec = plane_partition_counts_by_recurrence(cap)
        extra = {"graded": graded, "ok_plane_partitions": graded == rows == rec}
    return _compare("skew", {"lambda": lam.to_json(), "cap": cap}, lhs, rhs, **extra)


def _xy_product(hooks, cap: int, cls=BivarSeries):
    return cls.geom_product((xy_monomial(hs) for hs in hooks if hs.hook_len <= cap), cap)


def _external(lam: Partition, cap: int) -> list[HookStats]:
    return [hs for _, hs in external_hooks_up_to(lam, cap)] if cap else []


def _internal(lam: Partition) -> list[HookStats]:
    return [hs for _, hs in internal_hooks(lam)]


def _univariate(hook_lengths, cap: int) -> BivarSeries:
    """``prod 1/(1 - q^h)`` stored as ``(n, 0)`` monomials."""
    return BivarSeries.geom_product(((h, 0) for h in hook_lengths if h <= cap), cap)


def verify_wallcrossing(lam: Partition, cap: int) -> Report:
    """External hooks of ``lam`` versus external hooks of the empty partition times internal hooks of ``lam``.

    The diagonal specialization ``x = y = q`` is checked against an
    independent product over hook lengths.
    """
    ext = _external(lam, cap)
    lhs = _xy_product(ext, cap)
    rhs = _xy_product(_external(Partition(()), cap), cap) * _xy_product(_internal(lam), cap)
    lhs_q = lhs.specialize_diagonal()
    direct_q = _univariate((hs.hook_len for hs in ext), cap)
    sagan = {
        "ok_diagonal": lhs_q == rhs.specialize_diagonal() == direct_q,
        "diagonal": lhs_q.graded_totals(),
    }
    return _compare("wallcross", {"lambda": lam.to_json(), "cap": cap}, lhs, rhs, **sagan)


def verify_refined_rpp(lam: Partition, cap: int) -> Report:
    """Hillman-Grassl refined weights against ``prod 1/(1 - q^h t^(leg-arm-1))``.

    Also checks that the decomposition round-trips on every filling used.
    """
    acc: Counter = Counter()
    roundtrip_failures = []
    for f in rpp_enumerate(lam, cap):
        acc[refined_weight(f)] += 1
        if hg_compose(hg_decompose(f)) != f and len(roundtrip_failures) < MAX_DIFFS:
            roundtrip_failures.append(f.to_json())
    lhs = QTSeries(cap, acc)
    rhs = QTSeries.geom_product(
        ((hs.hook_len, hs.leg - hs.arm - 1) for hs in _internal(lam) if hs.hook_len <= cap), cap
    )
    return _compare(
        "refined-rpp",
        {"lambda": lam.to_json(), "cap": cap},
        lhs,
        rhs,
        fillings=sum(acc.values()),
        roundtrip_failures=roundtrip_failures,
        ok_roundtrip=not roundtrip_failures,
    )


def _log_diff(a: dict, b: dict) -> list[dict]:
    out = []
    for k in sorted(set(a) | set(b), key=lambda m: (m.degree, m)):
        if a.get(k, 0) != b.get(k, 0):
            out.append({"monomial": str(k), "lhs": str(a.get(k, 0)), "rhs": str(b.get(k, 0))})
            if len(out) == MAX_DIFFS:
                break
    return out


def _span(hs: HookStats) -> tuple[int, int]:
    return hs.content_lo, hs.content_hi


def verify_hook_strip_series(d: int, ell: int, cap: int, expand: bool = False) -> Report:
    """Internal hooks of length ``ell`` on partitions of ``d`` versus external ones on ``d - ell``.

    The content-variable form is compared through truncated logarithms,
    which is equivalent to comparing the expanded products (see
    :func:`hookforge.series.geom_log`); ``expand=True`` also expands them.
    The ``(x, y)`` form is always expanded.
    """
    if not d >= ell >= 1:
        raise SeriesError(f"need d >= ell >= 1, got d={d}, ell={ell}")
    S = [h.stats for h in enumerate_S(d, ell)]
    Sp = [h.stats for h in enumerate_Sprime(d - ell, ell)]
    mono_S = [ContentMonomial.interval(*_span(hs)) for hs in S]
    mono_Sp = [ContentMonomial.interval(*_span(hs)) for hs in Sp]
    log_diffs = _log_diff(geom_log(mono_S, cap), geom_log(mono_Sp, cap))
    lhs_xy, rhs_xy = _xy_product(S, cap), _xy_product(Sp, cap)
    extra = {
        "size_S": len(S),
        "size_Sprime": len(Sp),
        "content_log_diffs": log_diffs,
        "ok_content": not log_diffs,
    }
    if expand:
        lhs_c, rhs_c = TruncSeries.geom_product(mono_S, cap), TruncSeries.geom_product(mono_Sp, cap)
        extra["content_expanded_diffs"] = _diff(lhs_c, rhs_c)
        extra["ok_expanded"] = not extra["content_expanded_diffs"]
    return _compare("hookstrip-series", {"d": d, "ell": ell, "cap": cap}, lhs_xy, rhs_xy, **extra)


def partition_count(d: int) -> int:
    return sum(1 for _ in partitions_of(d))


def verify_ultimate(d: int, cap: int) -> Report:
    """Sum over hook lengths of the hook-to-strip identity in ``(x, y)`` form.

    Left: internal hooks of every length on partitions of ``d + ell``.
    Right: the empty-partition external product to the power ``p(d)`` times
    internal hooks on partitions of ``d``.
    """
    if d < 0:
        raise SeriesError("d must be nonnegative")
    lhs_hooks = [h.stats for ell in range(1, cap + 1) for h in enumerate_S(d + ell, ell)]
    rhs_hooks = [h.stats for ell in range(1, min(d, cap) + 1) for h in enumerate_S(d, ell)]
    pd = partition_count(d)
    lhs = _xy_product(lhs_hooks, cap)
    rhs = _xy_product(_external(Partition(()), cap), cap) ** pd * _xy_product(rhs_hooks, cap)
    return _compare("ultimate", {"d": d, "cap": cap}, lhs, rhs, partition_count=pd)


__all__ = [
    "geom_expand",
    "hook_monomial",
    "verify_gansner",
    "verify_hook_strip_series",
    "verify_refined_rpp",
    "verify_skew",
    "verify_ultimate",
    "verify_wallcrossing",
]
