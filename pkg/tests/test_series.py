from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from bpa.counting import barred_count, fubini
from bpa.exactmath import binomial
from bpa.series import (
    InvalidRatio,
    RATIO_BOUND,
    _ratio_start,
    barred_series,
    barred_term,
    fubini_series,
    fubini_term,
    tail_bound,
)


def test_tail_bound_examples():
    assert tail_bound(Fraction(1), Fraction(1, 2)) == 1
    assert tail_bound(Fraction(0), Fraction(1, 3)) == 0
    assert tail_bound(Fraction(1), Fraction(2, 3)) == 2


@pytest.mark.parametrize("r", [Fraction(1), Fraction(3, 2), Fraction(-1, 2)])
def test_tail_bound_rejects_bad_ratio(r):
    with pytest.raises(InvalidRatio):
        tail_bound(Fraction(1), r)


@pytest.mark.parametrize("n,expected", [(0, 1), (2, 3), (4, 75)])
def test_fubini_series_examples(n, expected):
    assert fubini_series(n).rounded == expected


@pytest.mark.parametrize("n,m,expected", [(0, 1, 1), (2, 2, 15), (1, 3, 4)])
def test_barred_series_examples(n, m, expected):
    assert barred_series(n, m).rounded == expected


def test_geometric_case_partial_sums():
    # n = 0: (1/2) sum 2**-s, partial sums 1 - 2**-(S)
    res = fubini_series(0)
    assert res.partial_sum == 1 - Fraction(1, 2**res.terms_used)


def test_barred_term_is_binomial_form():
    for n in range(4):
        for m in range(4):
            for s in range(12):
                assert barred_term(n, m, s) == Fraction(binomial(s + m, m) * s**n, 2 ** (s + m + 1))
    assert all(barred_term(n, 0, s) == fubini_term(n, s) for n in range(5) for s in range(10))


def test_ratio_bound_holds_after_start():
    for n in range(8):
        for m in range(5):
            s0 = _ratio_start(n + m)
            assert 2 * (s0 + 1) ** (n + m) <= 3 * s0 ** (n + m)
            if s0 > 1:
                assert 2 * s0 ** (n + m) > 3 * (s0 - 1) ** (n + m)
            for s in range(s0, s0 + 40):
                assert barred_term(n, m, s + 1) <= RATIO_BOUND * barred_term(n, m, s)


def test_certificate_brackets_true_value():
    # the real omitted tail, summed far out, must stay under the bound
    for n, m in [(0, 0), (3, 0), (2, 2), (5, 3)]:
        res = barred_series(n, m)
        far = sum(barred_term(n, m, s) for s in range(res.terms_used, res.terms_used + 400))
        assert far <= res.tail_bound
        exact = barred_count(n, m)
        assert res.partial_sum <= exact <= res.upper


def test_acceptance_grid():
    for n in range(11):
        r = fubini_series(n)
        assert r.rounded == fubini(n) and r.tail_bound < Fraction(1, 2)
        for m in range(5):
            r = barred_series(n, m)
            assert r.rounded == barred_count(n, m) and r.tail_bound < Fraction(1, 2)
            assert abs(r.partial_sum + r.tail_bound - r.rounded) < Fraction(1, 2)


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 12), st.integers(0, 4), st.integers(0, 200))
def test_more_terms_do_not_change_result(n, m, extra):
    base = barred_series(n, m)
    longer = barred_series(n, m, min_terms=base.terms_used + extra)
    assert longer.rounded == base.rounded
    assert longer.terms_used >= base.terms_used
