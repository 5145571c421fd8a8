"""Infinite-sum representations of the counts, summed exactly with a certified tail.

Both series have non-negative terms whose successive ratio is bounded by
``(1 + 1/s)**k / 2`` with ``k = n + m``, a bound that decreases in s. Once s
reaches the first ``s0 >= 1`` with ``(1 + 1/s0)**k <= 3/2`` the ratio stays
below 3/4, so the omitted tail after term s is at most ``3 * term(s)``.
Summation continues past s0 until that bound is below 1/2. Terms decay
geometrically from s0 on, so the loop always terminates.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .exactmath import factorial, power, rising_factorial

__all__ = [
    "InvalidRatio",
    "RATIO_BOUND",
    "SeriesResult",
    "barred_series",
    "barred_term",
    "fubini_series",
    "fubini_term",
    "tail_bound",
]

RATIO_BOUND = Fraction(3, 4)
_HALF = Fraction(1, 2)


class InvalidRatio(ValueError):
    pass


@dataclass(frozen=True)
class SeriesResult:
    partial_sum: Fraction
    terms_used: int
    tail_bound: Fraction
    rounded: int

    @property
    def upper(self) -> Fraction:
        return self.partial_sum + self.tail_bound


def tail_bound(last_term: Fraction, ratio_bound: Fraction) -> Fraction:
    """Geometric majorant ``last_term * r / (1 - r)`` for the terms after ``last_term``.

    Valid when ``r`` dominates every later term ratio.
    """
    last_term, ratio_bound = Fraction(last_term), Fraction(ratio_bound)
    if not 0 <= ratio_bound < 1:
        raise InvalidRatio(f"ratio bound must lie in [0, 1), got {ratio_bound}")
    return last_term * ratio_bound / (1 - ratio_bound)


def fubini_term(n: int, s: int) -> Fraction:
    """``s**n / 2**(s+1)``."""
    return Fraction(power(s, n), 2 ** (s + 1))


def barred_term(n: int, m: int, s: int) -> Fraction:
    """``(s+1)(s+2)...(s+m) * s**n / (2**(m+1) * m! * 2**s)``."""
    return Fraction(
        rising_factorial(s + 1, m) * power(s, n),
        2 ** (m + 1) * factorial(m) * 2**s,
    )


def _ratio_start(k: int) -> int:
    """Smallest s >= 1 with (1 + 1/s)**k <= 3/2, i.e. 2 (s+1)**k <= 3 s**k."""
    if k == 0:
        return 1
    # (1 + 1/s)**k <= exp(k/s) <= 3/2 once s >= k / ln(3/2); search down from there
    s = max(1, math.ceil(k / math.log(1.5)))
    while s > 1 and 2 * s**k <= 3 * (s - 1) ** k:
        s -= 1
    while 2 * (s + 1) ** k > 3 * s**k:
        s += 1
    return s


def _certified_sum(term: Callable[[int], Fraction], k: int, min_terms: int) -> SeriesResult:
    s0 = _ratio_start(k)
    partial = Fraction(0)
    s = 0
    while True:
        t = term(s)
        partial += t
        s += 1
        if s - 1 >= s0 and s >= min_terms:
            bound = tail_bound(t, RATIO_BOUND)
            if bound < _HALF:
                break
    # the true sum lies in [partial, partial + bound], an interval shorter than 1/2
    rounded = math.floor(partial + bound / 2 + _HALF)
    return SeriesResult(partial, s, bound, rounded)


def fubini_series(n: int, min_terms: int = 0) -> SeriesResult:
    """Fubini number from ``(1/2) * sum_s s**n / 2**s``.

    ``min_terms`` forces at least that many terms to be summed; the rounded
    value does not depend on it.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    return _certified_sum(lambda s: fubini_term(n, s), n, min_terms)


def barred_series(n: int, m: int, min_terms: int = 0) -> SeriesResult:
    """Barred count (n items, m bars) from its rising-factorial series."""
    if n < 0 or m < 0:
        raise ValueError("n and m must be non-negative")
    return _certified_sum(lambda s: barred_term(n, m, s), n + m, min_terms)
