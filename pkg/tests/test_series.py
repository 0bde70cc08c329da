from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hookforge.series import (
    ONE,
    BivarSeries,
    ContentMonomial,
    QTSeries,
    SeriesError,
    TruncSeries,
    geom_log,
)

q = lambda *ks: ContentMonomial.from_counts({k: ks.count(k) for k in ks})  # noqa: E731


@st.composite
def content_series(draw, cap: int):
    terms = draw(
        st.dictionaries(
            st.lists(st.integers(-2, 2), max_size=3).map(lambda ks: q(*ks)),
            st.integers(-5, 5),
            max_size=6,
        )
    )
    return TruncSeries(cap, terms)


def test_monomial_basics():
    m = q(-1, -1, 0)
    assert str(m) == "q[-1]^2*q[0]"
    assert m.degree == 3 and ONE.degree == 0 and str(ONE) == "1"
    assert m * q(0, 2) == q(-1, -1, 0, 0, 2)
    assert ContentMonomial.interval(-1, 2) == q(-1, 0, 1, 2)
    assert m**0 == ONE and m**2 == q(-1, -1, -1, -1, 0, 0)


def test_geom_examples():
    assert TruncSeries.geom(q(0), 3).terms == {ONE: 1, q(0): 1, q(0, 0): 1, q(0, 0, 0): 1}
    assert TruncSeries.geom(q(0, 1, 2, 3), 3) == TruncSeries.one(3)
    assert BivarSeries.geom((1, 1), 4).terms == {(0, 0): 1, (1, 1): 1, (2, 2): 1}
    with pytest.raises(SeriesError):
        TruncSeries.geom(ONE, 3)
    with pytest.raises(SeriesError):
        QTSeries.geom((0, 5), 3)


@pytest.mark.parametrize("cap", [0, 1, 5, 12])
def test_geom_inverts_one_minus_m(cap):
    for d in range(1, cap + 1):
        m = ContentMonomial.interval(0, d - 1)
        one_minus = TruncSeries(cap, {ONE: 1, m: -1})
        assert TruncSeries.geom(m, cap) * one_minus == TruncSeries.one(cap)


@given(content_series(6), content_series(6), content_series(6))
@settings(max_examples=40)
def test_ring_axioms(a, b, c):
    one = TruncSeries.one(6)
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * one == a
    assert a * (b + c) == a * b + a * c
    assert a - a == TruncSeries(6)


@given(content_series(8), content_series(8), st.integers(0, 8))
@settings(max_examples=40)
def test_truncation_is_a_morphism(a, b, cap):
    assert (a * b).truncate(cap) == a.truncate(cap) * b.truncate(cap)
    assert (a + b).truncate(cap) == a.truncate(cap) + b.truncate(cap)


def test_truncate_cannot_grow():
    with pytest.raises(SeriesError):
        TruncSeries.one(2).truncate(3)


def test_mixed_types_rejected():
    with pytest.raises(SeriesError):
        TruncSeries.one(2) * BivarSeries.one(2)


def test_binomial_coefficients():
    from math import comb

    for n in range(1, 5):
        s = BivarSeries.one(9).mul_geom((1, 0), n)
        assert [s.coefficient((k, 0)) for k in range(10)] == [comb(n + k - 1, k) for k in range(10)]


def test_geom_product_matches_repeated_multiplication():
    ms = [q(0), q(1), q(0, 1), q(-1, 0), q(0)]
    direct = TruncSeries.one(5)
    for m in ms:
        direct = direct * TruncSeries.geom(m, 5)
    assert TruncSeries.geom_product(ms, 5) == direct
    assert direct.nonnegative()


def test_qt_truncates_on_q_only():
    s = QTSeries.geom((1, -3), 3)
    assert s.terms == {(0, 0): 1, (1, -3): 1, (2, -6): 1, (3, -9): 1}


def test_power_and_graded_totals():
    s = BivarSeries.geom((1, 0), 4) ** 2
    assert s.graded_totals() == [1, 2, 3, 4, 5]
    assert BivarSeries.geom((1, 1), 4).specialize_diagonal().terms == {(0, 0): 1, (2, 0): 1, (4, 0): 1}


def test_tsv_is_sorted_and_stable():
    s = TruncSeries.geom_product([q(-1), q(0)], 2)
    # within a degree, monomials sort by their (index, exponent) vectors
    assert s.to_tsv() == "1\t1\nq[-1]\t1\nq[0]\t1\nq[-1]*q[0]\t1\nq[-1]^2\t1\nq[0]^2\t1\n"
    assert BivarSeries.geom((1, 0), 1).to_tsv() == "x^0*y^0\t1\nx^1*y^0\t1\n"


@pytest.mark.parametrize("ms", [[q(0), q(1)], [q(0, 1), q(0), q(1)], [q(-1, 0, 1), q(0, 0)]])
def test_log_equality_tracks_expanded_equality(ms):
    cap = 6
    expanded = TruncSeries.geom_product(ms, cap)
    assert geom_log(ms, cap) == geom_log(list(reversed(ms)), cap)
    other = ms[:-1] + [ms[-1] * q(2)]
    assert (TruncSeries.geom_product(other, cap) == expanded) == (geom_log(other, cap) == geom_log(ms, cap))
