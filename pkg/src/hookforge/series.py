"""Truncated power series with exact integer coefficients.

Three flavours share one implementation and differ only in their monomials:

* :class:`TruncSeries` -- monomials in content-indexed variables ``q_k``
  (``k`` any integer), truncated by total degree;
* :class:`BivarSeries` -- monomials ``x^a y^b``, truncated by ``a + b``;
* :class:`QTSeries` -- monomials ``q^n t^s`` with ``s`` unrestricted in sign,
  truncated by ``n`` only.

Every product over hooks in this package is an infinite product of factors
``1/(1 - m)`` where ``m`` has degree equal to a hook length.  A factor with
``deg m > cap`` is ``1`` modulo the cap, so only finitely many factors matter.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from typing import ClassVar, Hashable, Iterable


class SeriesError(ValueError):
    pass


@dataclass(frozen=True, order=True)
class ContentMonomial:
    """Sparse product ``prod q_k^e``, stored as sorted ``(k, e)`` pairs."""

    exps: tuple[tuple[int, int], ...] = ()

    @classmethod
    def from_counts(cls, counts) -> ContentMonomial:
        items = counts.items() if hasattr(counts, "items") else counts
        return cls(tuple(sorted((k, e) for k, e in items if e)))

    @classmethod
    def interval(cls, lo: int, hi: int) -> ContentMonomial:
        return cls(tuple((k, 1) for k in range(lo, hi + 1)))

    @property
    def degree(self) -> int:
        return sum(e for _, e in self.exps)

    def __mul__(self, other: ContentMonomial) -> ContentMonomial:
        if not other.exps:
            return self
        if not self.exps:
            return other
        acc = dict(self.exps)
        for k, e in other.exps:
            acc[k] = acc.get(k, 0) + e
        return ContentMonomial(tuple(sorted(acc.items())))

    def __pow__(self, n: int) -> ContentMonomial:
        return ContentMonomial(tuple((k, e * n) for k, e in self.exps)) if n else ContentMonomial()

    def __str__(self) -> str:
        if not self.exps:
            return "1"
        return "*".join(f"q[{k}]" if e == 1 else f"q[{k}]^{e}" for k, e in self.exps)


ONE = ContentMonomial()


class _Series:
    """Shared arithmetic; subclasses supply ``_deg``, ``_mul`` and ``_one``."""

    _one: ClassVar[Hashable]

    def __init__(self, cap: int, terms: dict | None = None):
        if cap < 0:
            raise SeriesError("cap must be nonnegative")
        self.cap = cap
        self.terms: dict = {}
        for k, v in (terms or {}).items():
            if v and self._deg(k) <= cap:
                self.terms[k] = self.terms.get(k, 0) + v
        self.terms = {k: v for k, v in self.terms.items() if v}

    @staticmethod
    def _deg(key) -> int:
        raise NotImplementedError

    @staticmethod
    def _mul(a, b):
        raise NotImplementedError

    @classmethod
    def one(cls, cap: int):
        return cls(cap, {cls._one: 1})

    @classmethod
    def monomial(cls, key, cap: int, coeff: int = 1):
        return cls(cap, {key: coeff})

    def _new(self, terms: dict, cap: int | None = None):
        out = type(self).__new__(type(self))
        out.cap = self.cap if cap is None else cap
        out.terms = {k: v for k, v in terms.items() if v}
        return out

    def _check(self, other: _Series) -> None:
        if type(other) is not type(self):
            raise SeriesError(f"cannot combine {type(self).__name__} with {type(other).__name__}")

    def __eq__(self, other) -> bool:
        if not isinstance(other, _Series):
            return NotImplemented
        return type(self) is type(other) and self.cap == other.cap and self.terms == other.terms

    def __repr__(self) -> str:
        return f"{type(self).__name__}(cap={self.cap}, terms={len(self.terms)})"

    def __add__(self, other):
        self._check(other)
        cap = min(self.cap, other.cap)
        acc = defaultdict(int)
        for src in (self, other):
            for k, v in src.terms.items():
                if self._deg(k) <= cap:
                    acc[k] += v
        return self._new(acc, cap)

    def __neg__(self):
        return self._new({k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        self._check(other)
        cap = min(self.cap, other.cap)
        deg, mul = self._deg, self._mul
        acc = defaultdict(int)
        b_items = [(k, v, deg(k)) for k, v in other.terms.items()]
        for ka, va in self.terms.items():
            da = deg(ka)
            if da > cap:
                continue
            for kb, vb, db in b_items:
                if da + db <= cap:
                    acc[mul(ka, kb)] += va * vb
        return self._new(acc, cap)

    def __pow__(self, n: int):
        out = self.one(self.cap)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def truncate(self, cap: int):
        if cap > self.cap:
            raise SeriesError("cannot truncate to a larger cap")
        return self._new({k: v for k, v in self.terms.items() if self._deg(k) <= cap}, cap)

    def coefficient(self, key) -> int:
        return self.terms.get(key, 0)

    def graded_totals(self) -> list[int]:
        """Coefficient sums per degree ``0..cap``."""
        out = [0] * (self.cap + 1)
        for k, v in self.terms.items():
            out[self._deg(k)] += v
        return out

    def mul_geom(self, m, power: int = 1):
        """``self / (1 - m)^power`` truncated at the cap.

        Solves ``R = S + m R`` degree by degree, which is a single sweep since
        ``m`` has positive degree.
        """
        dm = self._deg(m)
        if dm <= 0:
            raise SeriesError(f"geometric expansion of {m} diverges")
        if dm > self.cap:
            return self
        deg, mul = self._deg, self._mul
        acc = dict(self.terms)
        for _ in range(power):
            buckets: list[list] = [[] for _ in range(self.cap + 1)]
            for k in acc:
                buckets[deg(k)].append(k)
            for d in range(self.cap + 1 - dm):
                for k in buckets[d]:
                    nk = mul(k, m)
                    if nk not in acc:
                        acc[nk] = 0
                        buckets[d + dm].append(nk)
                    acc[nk] += acc[k]
        return self._new(acc)

    @classmethod
    def geom(cls, m, cap: int):
        """``1/(1 - m) = 1 + m + m^2 + ...`` truncated at ``cap``."""
        return cls.one(cap).mul_geom(m)

    @classmethod
    def geom_product(cls, monomials: Iterable, cap: int):
        """``prod 1/(1 - m)`` over a multiset of monomials."""
        counts: dict = defaultdict(int)
        for m in monomials:
            counts[m] += 1
        out = cls.one(cap)
        for m in sorted(counts, key=lambda k: (cls._deg(k), k)):
            out = out.mul_geom(m, counts[m])
        return out

    def nonnegative(self) -> bool:
        return all(v > 0 for v in self.terms.values())

    def sorted_terms(self) -> list:
        return sorted(self.terms.items(), key=lambda kv: (self._deg(kv[0]), kv[0]))


class TruncSeries(_Series):
    _one = ONE

    @staticmethod
    def _deg(key: ContentMonomial) -> int:
        return key.degree

    @staticmethod
    def _mul(a: ContentMonomial, b: ContentMonomial) -> ContentMonomial:
        return a * b

    def to_tsv(self) -> str:
        """``monomial<TAB>coefficient`` lines, sorted by degree then monomial."""
        return "".join(f"{m}\t{v}\n" for m, v in self.sorted_terms())


class BivarSeries(_Series):
    _one = (0, 0)

    @staticmethod
    def _deg(key: tuple[int, int]) -> int:
        return key[0] + key[1]

    @staticmethod
    def _mul(a, b):
        return (a[0] + b[0], a[1] + b[1])

    def specialize_diagonal(self) -> BivarSeries:
        """Set ``x = y = q``; the result is stored with monomials ``(n, 0)``."""
        acc: dict = defaultdict(int)
        for (a, b), v in self.terms.items():
            acc[(a + b, 0)] += v
        return self._new(acc)

    def to_tsv(self) -> str:
        return "".join(f"x^{a}*y^{b}\t{v}\n" for (a, b), v in self.sorted_terms())


class QTSeries(_Series):
    _one = (0, 0)

    @staticmethod
    def _deg(key: tuple[int, int]) -> int:
        return key[0]

    @staticmethod
    def _mul(a, b):
        return (a[0] + b[0], a[1] + b[1])

    def to_tsv(self) -> str:
        return "".join(f"q^{a}*t^{b}\t{v}\n" for (a, b), v in self.sorted_terms())


def geom_log(monomials: Iterable[ContentMonomial], cap: int) -> dict[ContentMonomial, Fraction]:
    """Logarithm of ``prod 1/(1 - m)`` truncated at ``cap``: ``sum_m sum_k m^k / k``.

    Log and exp are mutually inverse on series with constant term 1 and both
    respect the degree filtration, so two such products agree up to ``cap``
    exactly when their truncated logarithms do.  The logarithm has at most
    ``cap`` terms per factor, where the expanded product can have millions.
    """
    acc: dict = defaultdict(Fraction)
    for m in monomials:
        d = m.degree
        if d <= 0:
            raise SeriesError("geometric expansion of the unit monomial diverges")
        k = 1
        while k * d <= cap:
            acc[m**k] += Fraction(1, k)
            k += 1
    return {m: v for m, v in acc.items() if v}
