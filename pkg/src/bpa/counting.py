"""Exact counts of preferential, barred and restricted barred arrangements.

Three families of numbers live here, each with two independent routes:

* ``fubini(n)``: ordered set partitions of an n-set. Stirling closed form,
  cross-checked by the binomial recurrence ``J(n+1) = sum C(n+1, s) J(s)``.
* ``barred_count(n, m)``: arrangements of an n-set with m bars. Closed form
  ``sum {n, s} s! C(m+s, m)`` and the sectioning recurrence over m.
* ``restricted_count(n, m)``: barred arrangements whose first m sections hold
  at most one block each (the last section is free). Computed by the doubling
  recurrence ``I(n, m+1) = 2 I(n, m) - m**n`` from ``I(n, 0) = fubini(n)``, and
  cross-checked by ``sum C(n, s) m**(n-s) J(s)``.

:class:`CountTable` memoizes a rectangle of values and can be persisted in a
small plain-text format with a SHA-256 trailer.
"""

from __future__ import annotations

import enum
import hashlib
import os
import threading
from dataclasses import dataclass, field
from typing import Dict, Tuple

from .exactmath import binomial, factorial, power, stirling2

__all__ = [
    "CacheIOError",
    "CountTable",
    "InternalInconsistency",
    "Kind",
    "MalformedCache",
    "Provenance",
    "barred_count",
    "barred_count_rec",
    "build_table",
    "dumps_cache",
    "fubini",
    "fubini_rec",
    "load_cache",
    "loads_cache",
    "restricted_count",
    "restricted_count_sum",
    "save_cache",
]


class InternalInconsistency(RuntimeError):
    """Two computation routes disagreed. Always a bug, never user error."""


class MalformedCache(ValueError):
    pass


class CacheIOError(OSError):
    pass


def _check_index(**kw):
    for name, value in kw.items():
        if not isinstance(value, int) or isinstance(value, bool) or value < 0:
            raise ValueError(f"{name} must be a non-negative integer, got {value!r}")


# -- Fubini numbers ---------------------------------------------------------


def fubini(n: int) -> int:
    """Number of preferential arrangements (ordered set partitions) of n items."""
    _check_index(n=n)
    return sum(stirling2(n, s) * factorial(s) for s in range(n + 1))


_fubini_rec_values = [1]
_fubini_rec_lock = threading.Lock()


def fubini_rec(n: int) -> int:
    """Fubini numbers by the binomial recurrence, kept as a separate route."""
    _check_index(n=n)
    vals = _fubini_rec_values
    if n < len(vals):
        return vals[n]
    with _fubini_rec_lock:
        while len(vals) <= n:
            k = len(vals)
            vals.append(sum(binomial(k, s) * vals[s] for s in range(k)))
    return vals[n]


# -- barred arrangements ----------------------------------------------------


def barred_count(n: int, m: int) -> int:
    """Number of arrangements of n items with m bars (closed form)."""
    _check_index(n=n, m=m)
    return sum(
        stirling2(n, s) * factorial(s) * binomial(m + s, m) for s in range(n + 1)
    )


_barred_rec_memo: Dict[Tuple[int, int], int] = {}
_barred_rec_lock = threading.Lock()


def barred_count_rec(n: int, m: int) -> int:
    """Same value as :func:`barred_count`, via the sectioning recurrence.

    ``J(n, m) = sum_s C(n, s) J(s, 0) J(n-s, m-1)`` for m >= 1, bottoming out
    in :func:`fubini_rec` at m == 0.
    """
    _check_index(n=n, m=m)
    if m == 0:
        return fubini_rec(n)
    memo = _barred_rec_memo
    hit = memo.get((n, m))
    if hit is not None:
        return hit

    def column(j, k):
        return fubini_rec(j) if k == 0 else memo[(j, k)]

    with _barred_rec_lock:
        # fill column by column so no Python recursion is needed
        for mm in range(1, m + 1):
            for nn in range(n + 1):
                if (nn, mm) not in memo:
                    memo[(nn, mm)] = sum(
                        binomial(nn, s) * fubini_rec(s) * column(nn - s, mm - 1)
                        for s in range(nn + 1)
                    )
    return memo[(n, m)]


# -- restricted barred arrangements ----------------------------------------


def restricted_count(n: int, m: int) -> int:
    """Number of restricted barred arrangements, via ``I(n,k+1) = 2 I(n,k) - k**n``."""
    _check_index(n=n, m=m)
    value = fubini(n)
    for k in range(m):
        value = 2 * value - power(k, n)
    return value


def restricted_count_sum(n: int, m: int) -> int:
    """Restricted count by direct distribution.

    Pick the s elements that go to the free section (arranged in ``J(s)``
    ways) and send each of the other n - s elements to one of the m
    single-block sections.
    """
    _check_index(n=n, m=m)
    return sum(
        binomial(n, s) * power(m, n - s) * fubini(s) for s in range(n + 1)
    )


# -- tables and the on-disk cache ------------------------------------------


class Kind(enum.Enum):
    BARRED = "barred"
    RESTRICTED = "restricted"


class Provenance(enum.Enum):
    CLOSED_FORM = "closed-form"
    RECURRENCE = "recurrence"
    LOADED = "loaded-from-cache"


# (primary route, check route, provenance of the stored value)
_ROUTES = {
    Kind.BARRED: (barred_count, barred_count_rec, Provenance.CLOSED_FORM),
    Kind.RESTRICTED: (restricted_count, restricted_count_sum, Provenance.RECURRENCE),
}


@dataclass(eq=True)
class CountTable:
    """Memoized grid of counts keyed by ``(n, m)``.

    Equality compares kind and values only; provenance is bookkeeping.
    Reads are lock-free. Writes go through :meth:`extend`, which holds a lock,
    and racing writers would store identical values anyway.
    """

    kind: Kind
    entries: Dict[Tuple[int, int], int] = field(default_factory=dict)
    provenance: Dict[Tuple[int, int], Provenance] = field(
        default_factory=dict, compare=False, repr=False
    )
    _lock: threading.Lock = field(
        default_factory=threading.Lock, compare=False, repr=False
    )

    @property
    def n_max(self) -> int:
        return max((n for n, _ in self.entries), default=-1)

    @property
    def m_max(self) -> int:
        return max((m for _, m in self.entries), default=-1)

    def __getitem__(self, key: Tuple[int, int]) -> int:
        value = self.entries.get(key)
        if value is None:
            n, m = key
            self.extend(max(n, self.n_max), max(m, self.m_max))
            value = self.entries[key]
        return value

    def __contains__(self, key) -> bool:
        return key in self.entries

    def extend(self, n_max: int, m_max: int) -> "CountTable":
        """Fill every missing cell of ``[0..n_max] x [0..m_max]``.

        Each new cell is computed by both routes for this kind;
        :class:`InternalInconsistency` is raised on disagreement.
        """
        _check_index(n_max=n_max, m_max=m_max)
        primary, check, prov = _ROUTES[self.kind]
        with self._lock:
            for n in range(n_max + 1):
                for m in range(m_max + 1):
                    if (n, m) in self.entries:
                        continue
                    a, b = primary(n, m), check(n, m)
                    if a != b:
                        raise InternalInconsistency(
                            f"{self.kind.value} count at n={n}, m={m}: "
                            f"{primary.__name__} gave {a}, {check.__name__} gave {b}"
                        )
                    self.entries[(n, m)] = a
                    self.provenance[(n, m)] = prov
        return self

    def rows(self):
        """Yield ``(n, [values for m = 0..m_max])`` for a full rectangle."""
        for n in range(self.n_max + 1):
            yield n, [self.entries[(n, m)] for m in range(self.m_max + 1)]


def build_table(n_max: int, m_max: int, kind: Kind | str = Kind.BARRED) -> CountTable:
    return CountTable(Kind(kind)).extend(n_max, m_max)


_MAGIC = "bpa-cache"
_VERSION = "v1"


def dumps_cache(table: CountTable) -> str:
    lines = [f"{_MAGIC} {_VERSION} {table.kind.value}\n"]
    for (n, m) in sorted(table.entries):
        lines.append(f"{n} {m} {table.entries[(n, m)]}\n")
    body = "".join(lines)
    digest = hashlib.sha256(body.encode("ascii")).hexdigest()
    return f"{body}# sha256 {digest}\n"


def loads_cache(text: str) -> CountTable:
    if not text:
        raise MalformedCache("empty cache")
    lines = text.splitlines(keepends=True)
    last = lines[-1].rstrip("\n")
    if not last.startswith("# sha256 "):
        raise MalformedCache("missing sha256 trailer")
    body = "".join(lines[:-1])
    expected = last[len("# sha256 "):].strip()
    if hashlib.sha256(body.encode("utf-8")).hexdigest() != expected:
        raise MalformedCache("checksum mismatch")

    header = lines[0].split() if len(lines) > 1 else []
    if len(header) != 3 or header[0] != _MAGIC:
        raise MalformedCache(f"bad header: {lines[0]!r}")
    if header[1] != _VERSION:
        raise MalformedCache(f"unsupported cache version {header[1]!r}")
    try:
        table = CountTable(Kind(header[2]))
    except ValueError:
        raise MalformedCache(f"unknown table kind {header[2]!r}") from None

    prev = None
    for lineno, line in enumerate(lines[1:-1], start=2):
        if line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 3 or not all(p.isdigit() for p in parts):
            raise MalformedCache(f"line {lineno}: expected '<n> <m> <value>'")
        n, m, value = map(int, parts)
        if prev is not None and (n, m) <= prev:
            raise MalformedCache(f"line {lineno}: entries not sorted by (n, m)")
        prev = (n, m)
        table.entries[(n, m)] = value
        table.provenance[(n, m)] = Provenance.LOADED
    return table


def save_cache(table: CountTable, destination: str | os.PathLike) -> None:
    try:
        with open(destination, "w", encoding="ascii", newline="\n") as fh:
            fh.write(dumps_cache(table))
    except OSError as exc:
        raise CacheIOError(exc.errno, f"cannot write cache: {exc.strerror}", str(destination)) from exc


def load_cache(source: str | os.PathLike) -> CountTable:
    try:
        with open(source, encoding="utf-8", newline="") as fh:
            text = fh.read()
    except UnicodeDecodeError as exc:
        raise MalformedCache(f"cache is not text: {exc}") from exc
    except OSError as exc:
        raise CacheIOError(exc.errno, f"cannot read cache: {exc.strerror}", str(source)) from exc
    return loads_cache(text)
