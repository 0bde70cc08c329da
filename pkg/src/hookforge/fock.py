"""Semi-infinite wedge model on Maya diagrams.

A basis state is a pair ``(charge, shape)``.  Occupied half-integer
positions are ``shape_k - k - 1/2 + charge`` for ``k = 0, 1, ...``; in code a
half-integer ``m + 1/2`` is stored as the integer ``m``.  Everything is derived
from the finite region where a state differs from its charge's vacuum, so no
infinite sets are ever built.

Wedge signs: inserting or removing position ``k`` costs
``(-1)^(#occupied positions > k)``.  Example: ``psi_{1/2}`` on the vacuum
finds nothing above ``1/2`` and gives ``+ (charge 1, empty shape)``, whose
occupied set is ``1/2, -1/2, -3/2, ...``.
"""

from __future__ import annotations

from collections import Counter, defaultdict
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Iterator

from .hook_strip import enumerate_S, enumerate_Sprime
from .partition import INTERNAL, Partition, PartitionError, contains, hook_stats, partitions_of
from .report import Report
from .series import ONE, ContentMonomial


def half(k) -> int:
    """Integer code ``m`` of the half-integer ``k = m + 1/2``."""
    m = Fraction(k) - Fraction(1, 2)
    if m.denominator != 1:
        raise PartitionError(f"{k} is not a half-integer")
    return int(m)


def half_value(m: int) -> Fraction:
    return Fraction(2 * m + 1, 2)


@dataclass(frozen=True, order=True)
class MayaState:
    charge: int
    shape: Partition

    @classmethod
    def vacuum(cls, charge: int = 0) -> MayaState:
        return cls(charge, Partition(()))

    @property
    def floor(self) -> int:
        """Highest position below which everything is occupied."""
        return self.charge - len(self.shape) - 1

    def occupied(self, low: int) -> list[int]:
        """Occupied integer codes ``>= low``, decreasing."""
        depth = max(len(self.shape), self.charge - low)
        return [p for p in (self.shape.part(k) - k - 1 + self.charge for k in range(depth)) if p >= low]

    def is_occupied(self, m: int) -> bool:
        return m <= self.floor or m in self.occupied(m)

    def count_above(self, m: int) -> int:
        return sum(1 for p in self.occupied(m + 1))

    def positions(self, low: int) -> list[Fraction]:
        return [half_value(p) for p in self.occupied(low)]

    def __str__(self) -> str:
        return f"{self.charge}:{self.shape}"


def state_from_occupied(occ: Iterable[int], floor: int) -> MayaState:
    """State whose occupied codes are ``occ`` together with every code ``< floor``."""
    pos = sorted((p for p in occ if p >= floor), reverse=True)
    charge = len(pos) + floor
    parts = [p - charge + k + 1 for k, p in enumerate(pos)]
    return MayaState(charge, Partition(tuple(p for p in parts if p > 0)))


class FockVector:
    """Finite combination ``sum coeff * monomial * |state>`` with integer coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms: dict | None = None):
        self.terms: dict[tuple[MayaState, ContentMonomial], int] = {
            k: v for k, v in (terms or {}).items() if v
        }

    @classmethod
    def basis(cls, state: MayaState, coeff: int = 1, mono: ContentMonomial = ONE) -> FockVector:
        return cls({(state, mono): coeff})

    def __eq__(self, other) -> bool:
        return isinstance(other, FockVector) and self.terms == other.terms

    def __repr__(self) -> str:
        body = " + ".join(f"{v}*{m}|{s}>" for (s, m), v in sorted(self.terms.items()))
        return f"FockVector({body or '0'})"

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __add__(self, other: FockVector) -> FockVector:
        acc = Counter(self.terms)
        acc.update(other.terms)
        return FockVector(acc)

    def __sub__(self, other: FockVector) -> FockVector:
        return self + other.scale(-1)

    def scale(self, c: int) -> FockVector:
        return FockVector({k: c * v for k, v in self.terms.items()})

    def coefficient(self, state: MayaState) -> dict[ContentMonomial, int]:
        return {m: v for (s, m), v in self.terms.items() if s == state}

    def inner(self, state: MayaState) -> int:
        """``<state|self>`` for an untwisted vector."""
        return sum(self.coefficient(state).values())

    def states(self) -> set[MayaState]:
        return {s for s, _ in self.terms}


Basic = Callable[[MayaState], Iterator[tuple[MayaState, int, ContentMonomial]]]


def _lift(op: Basic, v: FockVector) -> FockVector:
    acc: dict = defaultdict(int)
    for (s, m), c in v.terms.items():
        for t, sign, mono in op(s):
            acc[(t, m * mono)] += c * sign
    return FockVector(acc)


def _psi(m: int) -> Basic:
    def op(s: MayaState):
        if not s.is_occupied(m):
            floor = min(s.floor, m)
            yield state_from_occupied(s.occupied(floor) + [m], floor), (-1) ** s.count_above(m), ONE

    return op


def _psi_star(m: int) -> Basic:
    def op(s: MayaState):
        if s.is_occupied(m):
            floor = min(s.floor, m - 1)
            occ = [p for p in s.occupied(floor) if p != m]
            yield state_from_occupied(occ, floor), (-1) ** s.count_above(m), ONE

    return op


def apply_psi(k, v: FockVector) -> FockVector:
    """Wedge with position ``k``; raises the charge by one."""
    return _lift(_psi(half(k)), v)


def apply_psi_star(k, v: FockVector) -> FockVector:
    """Contract position ``k``, the adjoint of :func:`apply_psi`."""
    return _lift(_psi_star(half(k)), v)


def normal_ordered_pair(i, j, v: FockVector) -> FockVector:
    """``:psi_i psi_j^*:``, which is ``psi_i psi_j^*`` for ``j > 0`` and ``-psi_j^* psi_i`` otherwise."""
    if Fraction(j) > 0:
        return apply_psi(i, apply_psi_star(j, v))
    return apply_psi_star(j, apply_psi(i, v)).scale(-1)


def _diag_window(s: MayaState) -> range:
    """Codes where ``s`` may differ from the charge-0 vacuum."""
    top = s.occupied(s.floor)[0] if s.occupied(s.floor) else s.floor
    return range(min(s.floor, -1), max(top, 0) + 1)


def _diag_sum(s: MayaState, weight: Callable[[int], Fraction]) -> Fraction:
    basis = FockVector.basis(s)
    total = Fraction(0)
    for m in _diag_window(s):
        k = half_value(m)
        total += weight(m) * normal_ordered_pair(k, k, basis).inner(s)
    return total


def charge_eigenvalue(s: MayaState) -> int:
    """``F_0 = sum_k :psi_k psi_k^*:`` evaluated on a basis state."""
    return int(_diag_sum(s, lambda m: Fraction(1)))


def energy(s: MayaState) -> Fraction:
    """``F_1 = sum_k k :psi_k psi_k^*:``; equals ``|shape| + charge^2 / 2``."""
    return _diag_sum(s, half_value)


def _alpha_window(s: MayaState, E: int) -> range:
    occ = s.occupied(s.floor)
    top = occ[0] if occ else s.floor
    return range(s.floor - abs(E), top + 1)


def alpha_bilinear(E: int, v: FockVector) -> FockVector:
    """``alpha_E = sum_k :psi_{k-E} psi_k^*:`` by direct operator application."""
    if E == 0:
        raise PartitionError("alpha_0 is not a boson operator here")
    acc = FockVector()
    for (s, mono), c in v.terms.items():
        basis = FockVector.basis(s, c, mono)
        for m in _alpha_window(s, E):
            acc = acc + normal_ordered_pair(half_value(m - E), half_value(m), basis)
    return acc


def _bead_moves(E: int) -> Basic:
    """Move one bead from ``m`` to ``m - E``; sign counts beads jumped over."""

    def op(s: MayaState):
        occ = s.occupied(s.floor - abs(E))
        occ_set = set(occ)
        for m in occ:
            dst = m - E
            if dst in occ_set or dst <= s.floor - abs(E) - 1:
                continue
            lo, hi = min(m, dst), max(m, dst)
            between = sum(1 for p in occ if lo < p < hi)
            new = state_from_occupied([p for p in occ if p != m] + [dst], s.floor - abs(E))
            # the strip's cells have contents from lo+1 to hi, shifted by the charge
            mono = ContentMonomial.interval(lo + 1 - s.charge, hi - s.charge)
            yield new, (-1) ** between, mono

    return op


def alpha(E: int, v: FockVector) -> FockVector:
    """Free boson by bead moves; untwisted, with Murnaghan-Nakayama signs."""
    if E == 0:
        raise PartitionError("alpha_0 is not a boson operator here")
    op = _bead_moves(E)
    return _lift(lambda s: ((t, sign, ONE) for t, sign, _ in op(s)), v)


def alpha_twisted(E: int, v: FockVector) -> FockVector:
    """Same moves as :func:`alpha`, weighted by the strip's content monomial with sign ``+1``."""
    if E == 0:
        raise PartitionError("alpha_0 is not a boson operator here")
    op = _bead_moves(E)
    return _lift(lambda s: ((t, 1, mono) for t, _, mono in op(s)), v)


def remove_border_strips(lam: Partition, E: int) -> dict[Partition, int]:
    """Diagram surgery: ``lam`` minus each removable border strip of size ``E``, with sign ``(-1)^(rows-1)``."""
    out: dict[Partition, int] = {}
    for c in lam.cells():
        hs = hook_stats(lam, c, INTERNAL)
        if hs.hook_len != E:
            continue
        r, col, foot = c.row, c.col, c.row + hs.leg
        parts = list(lam.parts)
        for i in range(r, foot):
            parts[i] = max(col, lam.part(i + 1) - 1)
        parts[foot] = col
        out[Partition(tuple(p for p in parts if p > 0))] = (-1) ** hs.leg
    return out


def add_border_strips(mu: Partition, E: int) -> dict[Partition, int]:
    """Every ``lam`` with ``mu = lam`` minus a border strip of size ``E``, by surgery on ``lam``."""
    return {
        lam: sign
        for lam in partitions_of(mu.size + E)
        if all(contains(lam, x) for x in mu.cells())
        for nu, sign in remove_border_strips(lam, E).items()
        if nu == mu
    }


def matrix_elements(E: int, sources: Iterable[Partition]) -> list[tuple[Partition, Partition, ContentMonomial]]:
    """``(source, target, monomial)`` for every nonzero twisted matrix element, sorted."""
    rows = []
    for lam in sources:
        out = alpha_twisted(E, FockVector.basis(MayaState(0, lam)))
        for (s, mono), c in out.terms.items():
            rows.extend([(lam, s.shape, mono)] * c)
    return sorted(rows, key=lambda t: (t[0].parts, t[1].parts, t[2]))


def matrix_elements_tsv(E: int, sources: Iterable[Partition]) -> str:
    return "".join(f"{a}\t{b}\t{m}\n" for a, b, m in matrix_elements(E, sources))


def verify_fock_identity(d: int, ell: int) -> Report:
    """Twisted boson matrix elements between sizes ``d`` and ``d - ell``, both directions.

    Each side's monomial multiset must equal the other's and the content
    monomials of the matching hook set.
    """
    if not d >= ell >= 1:
        raise PartitionError(f"need d >= ell >= 1, got d={d}, ell={ell}")
    down = matrix_elements(ell, partitions_of(d))
    up = matrix_elements(-ell, partitions_of(d - ell))
    lhs = Counter(m for _, _, m in down)
    rhs = Counter(m for _, _, m in up)
    pairs_down = Counter((a.parts, b.parts, m) for a, b, m in down)
    pairs_up = Counter((b.parts, a.parts, m) for a, b, m in up)
    hooks_S = Counter(ContentMonomial.interval(*_span(h)) for h in enumerate_S(d, ell))
    hooks_Sp = Counter(ContentMonomial.interval(*_span(h)) for h in enumerate_Sprime(d - ell, ell))
    checks = {
        "polynomial": lhs == rhs,
        "pairwise": pairs_down == pairs_up,
        "multiplicity_free": all(v == 1 for v in pairs_down.values()),
        "lhs_vs_internal_hooks": lhs == hooks_S,
        "rhs_vs_external_hooks": rhs == hooks_Sp,
    }
    return Report(
        "fock",
        {"d": d, "ell": ell},
        all(checks.values()),
        {"terms": sum(lhs.values()), "checks": checks, "polynomial": _poly_str(lhs)},
    )


def _span(h) -> tuple[int, int]:
    hs = h.stats
    return hs.content_lo, hs.content_hi


def _poly_str(poly: Counter) -> str:
    items = sorted(poly.items(), key=lambda kv: (kv[0].degree, kv[0]))
    return " + ".join(str(m) if c == 1 else f"{c}*{m}" for m, c in items) or "0"


def states_up_to(energy_max: int, charge: int = 0) -> list[MayaState]:
    return [MayaState(charge, lam) for n in range(energy_max + 1) for lam in partitions_of(n)]


__all__ = [
    "FockVector",
    "MayaState",
    "alpha",
    "alpha_bilinear",
    "alpha_twisted",
    "apply_psi",
    "apply_psi_star",
    "charge_eigenvalue",
    "energy",
    "normal_ordered_pair",
    "verify_fock_identity",
]
