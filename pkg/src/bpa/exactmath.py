"""Exact integer primitives: factorials, binomials, Stirling numbers, powers.

Everything here works on Python ints, so there is no overflow at any size.
Out-of-range Stirling and binomial arguments give 0 instead of raising, which
keeps the summation loops elsewhere free of boundary cases.
"""

from __future__ import annotations

import math
import threading

__all__ = [
    "binomial",
    "factorial",
    "power",
    "rising_factorial",
    "stirling1_signed",
    "stirling2",
]


def binomial(n: int, k: int) -> int:
    """C(n, k), with 0 for k > n."""
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def factorial(n: int) -> int:
    return math.factorial(n)


def power(base: int, exp: int) -> int:
    """``base ** exp`` with the convention 0**0 == 1 (Python already agrees)."""
    if exp < 0:
        raise ValueError("exponent must be non-negative")
    return base**exp


def rising_factorial(x: int, m: int) -> int:
    """x (x+1) ... (x+m-1); the empty product for m == 0 is 1."""
    out = 1
    for i in range(m):
        out *= x + i
    return out


class _Triangle:
    """Row-cached triangle built from a row recurrence.

    Rows are only ever appended, and each append happens under a lock, so a
    reader either sees a complete row or triggers the build itself.
    """

    def __init__(self, first_row, next_row):
        self._rows = [first_row]
        self._next_row = next_row
        self._lock = threading.Lock()

    def row(self, n: int) -> list[int]:
        rows = self._rows
        if n < len(rows):
            return rows[n]
        with self._lock:
            while len(rows) <= n:
                rows.append(self._next_row(len(rows) - 1, rows[-1]))
        return rows[n]

    def __call__(self, n: int, k: int) -> int:
        if n < 0 or k < 0 or k > n:
            return 0
        return self.row(n)[k]


def _stirling2_next(n, row):
    # {n+1, k} = k {n, k} + {n, k-1}
    out = [0] * (n + 2)
    for k in range(1, n + 2):
        out[k] = (k * row[k] if k <= n else 0) + row[k - 1]
    return out


def _stirling1_next(n, row):
    # s(n+1, k) = s(n, k-1) - n s(n, k)
    out = [0] * (n + 2)
    for k in range(1, n + 2):
        out[k] = row[k - 1] - (n * row[k] if k <= n else 0)
    return out


_S2 = _Triangle([1], _stirling2_next)
_S1 = _Triangle([1], _stirling1_next)


def stirling2(n: int, k: int) -> int:
    """Number of partitions of an n-set into k nonempty blocks."""
    return _S2(n, k)


def stirling1_signed(m: int, t: int) -> int:
    """Signed Stirling number of the first kind, sign (-1)**(m - t)."""
    return _S1(m, t)
