"""Lazy, exhaustive generation of arrangements; the ground truth for every count.

Labels are ``1..n``. A block is a ``frozenset`` of labels, a preferential
arrangement is a tuple of blocks, and a barred arrangement is a tuple of
``m + 1`` sections, each a (possibly empty) tuple of blocks.

Canonical order
---------------
Preferential arrangements come out by number of blocks, then
lexicographically by their block sequence with each block read as a sorted
label list. Bar placements of a k-block arrangement are the multisets of m
gap positions in ``0..k``, in lexicographic order. Restricted arrangements
are ordered by free-section subset (by size, then lexicographic), then by the
assignment of the remaining labels to the single-block sections, then by the
arrangement of the free section.

Text form
---------
Blocks print as their labels in ascending order, blocks are separated by one
space and sections by ``|``; e.g. ``7 34 1|256||``. With more than nine
labels, labels inside a block are comma separated (``10,12 3``).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, combinations_with_replacement, product
from typing import FrozenSet, Iterator, Optional, Sequence, Tuple, Union

from .counting import Kind

__all__ = [
    "SAFETY_LIMIT",
    "BarredArrangement",
    "DuplicateLabel",
    "LimitExceeded",
    "ParseError",
    "PreferentialArrangement",
    "RestrictedArrangement",
    "bar_placements",
    "canonical_render",
    "count_by_enumeration",
    "enum_barred",
    "enum_preferential",
    "enum_restricted",
    "parse",
]

#: Largest n that :func:`count_by_enumeration` accepts without an override.
SAFETY_LIMIT = 8

Block = FrozenSet[int]
Section = Tuple[Block, ...]


class LimitExceeded(ValueError):
    pass


class ParseError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class DuplicateLabel(ParseError):
    pass


@dataclass(frozen=True)
class PreferentialArrangement:
    blocks: Section
    n: int

    def as_barred(self) -> "BarredArrangement":
        return BarredArrangement((self.blocks,), self.n)


@dataclass(frozen=True, eq=False)
class BarredArrangement:
    """m bars splitting a preferential arrangement into m + 1 sections."""

    sections: Tuple[Section, ...]
    n: int

    @property
    def bars(self) -> int:
        return len(self.sections) - 1

    @property
    def blocks(self) -> Section:
        return tuple(b for sec in self.sections for b in sec)

    def validate(self) -> None:
        if not self.sections:
            raise ValueError("an arrangement has at least one section")
        seen = set()
        for block in self.blocks:
            if not block:
                raise ValueError("blocks must be nonempty")
            if seen & block:
                raise ValueError(f"label(s) {sorted(seen & block)} appear twice")
            seen |= block
        if seen != set(range(1, self.n + 1)):
            raise ValueError(f"labels {sorted(seen)} do not cover 1..{self.n}")

    # structural equality, so a restricted arrangement equals its parsed text
    def __eq__(self, other):
        if not isinstance(other, BarredArrangement):
            return NotImplemented
        return self.n == other.n and self.sections == other.sections

    def __hash__(self):
        return hash((self.n, self.sections))

    def __str__(self):
        return canonical_render(self)


@dataclass(frozen=True, eq=False)
class RestrictedArrangement(BarredArrangement):
    """Barred arrangement where every section but ``free`` holds at most one block."""

    free: int = -1

    def validate(self) -> None:
        super().validate()
        free = self.free % len(self.sections)
        for i, sec in enumerate(self.sections):
            if i != free and len(sec) > 1:
                raise ValueError(f"section {i} is not free but holds {len(sec)} blocks")


# -- generators -------------------------------------------------------------


def _subsets_lex(items: Sequence[int], max_len: int) -> Iterator[Tuple[int, ...]]:
    """Nonempty subsets of sorted ``items`` (size <= max_len) in lexicographic order."""
    if max_len <= 0:
        return
    for i, x in enumerate(items):
        yield (x,)
        for rest in _subsets_lex(items[i + 1:], max_len - 1):
            yield (x,) + rest


def _ordered_partitions(items: Tuple[int, ...], k: int) -> Iterator[Tuple[Tuple[int, ...], ...]]:
    """Sequences of exactly k blocks covering ``items``, lexicographically."""
    if k == 0:
        if not items:
            yield ()
        return
    if k == 1:
        yield (items,)
        return
    for first in _subsets_lex(items, len(items) - (k - 1)):
        taken = set(first)
        rest = tuple(x for x in items if x not in taken)
        for tail in _ordered_partitions(rest, k - 1):
            yield (first,) + tail


def _preferential_blocks(items: Tuple[int, ...]) -> Iterator[Section]:
    if not items:
        yield ()
        return
    for k in range(1, len(items) + 1):
        for seq in _ordered_partitions(items, k):
            yield tuple(frozenset(b) for b in seq)


def enum_preferential(n: int) -> Iterator[PreferentialArrangement]:
    """Every ordered set partition of ``{1..n}`` once, in canonical order."""
    _check(n=n)
    for blocks in _preferential_blocks(tuple(range(1, n + 1))):
        yield PreferentialArrangement(blocks, n)


def bar_placements(blocks: Section, m: int) -> Iterator[Tuple[Section, ...]]:
    """All ways to drop m bars into the ``len(blocks) + 1`` gaps of ``blocks``."""
    k = len(blocks)
    for gaps in combinations_with_replacement(range(k + 1), m):
        cuts = (0,) + gaps + (k,)
        yield tuple(blocks[cuts[i]:cuts[i + 1]] for i in range(m + 1))


def enum_barred(n: int, m: int) -> Iterator[BarredArrangement]:
    _check(n=n, m=m)
    for blocks in _preferential_blocks(tuple(range(1, n + 1))):
        for sections in bar_placements(blocks, m):
            yield BarredArrangement(sections, n)


def enum_restricted(n: int, m: int, free: Optional[int] = None) -> Iterator[RestrictedArrangement]:
    """Every restricted arrangement once.

    ``free`` is the index of the unconstrained section; the default is the
    last one (index ``m``).
    """
    _check(n=n, m=m)
    free = m if free is None else free
    if not 0 <= free <= m:
        raise ValueError(f"free section index must be in 0..{m}")
    labels = tuple(range(1, n + 1))
    for size in range(n + 1):
        for chosen in combinations(labels, size):
            picked = set(chosen)
            rest = tuple(x for x in labels if x not in picked)
            for assign in product(range(m), repeat=len(rest)):
                fixed = []
                for j in range(m):
                    block = frozenset(x for x, a in zip(rest, assign) if a == j)
                    fixed.append((block,) if block else ())
                for free_blocks in _preferential_blocks(chosen):
                    sections = tuple(fixed[:free]) + (free_blocks,) + tuple(fixed[free:])
                    yield RestrictedArrangement(sections, n, free)


def count_by_enumeration(
    n: int,
    m: int,
    kind: Union[Kind, str] = Kind.BARRED,
    limit: Optional[int] = SAFETY_LIMIT,
    free: Optional[int] = None,
) -> int:
    """Count arrangements by walking the stream. ``limit=None`` lifts the guard on n."""
    _check(n=n, m=m)
    if limit is not None and n > limit:
        raise LimitExceeded(f"n={n} exceeds the enumeration safety limit {limit}")
    kind = Kind(kind)
    if kind is Kind.BARRED:
        stream = enum_barred(n, m)
    else:
        stream = enum_restricted(n, m, free)
    return sum(1 for _ in stream)


def _check(**kw):
    for name, value in kw.items():
        if not isinstance(value, int) or value < 0:
            raise ValueError(f"{name} must be a non-negative integer, got {value!r}")


# -- text form --------------------------------------------------------------


def canonical_render(a: Union[BarredArrangement, PreferentialArrangement]) -> str:
    if isinstance(a, PreferentialArrangement):
        a = a.as_barred()
    sep = "," if a.n > 9 else ""
    return "|".join(
        " ".join(sep.join(map(str, sorted(block))) for block in section)
        for section in a.sections
    )


def parse(text: str, n: Optional[int] = None) -> BarredArrangement:
    """Inverse of :func:`canonical_render`.

    Without ``n`` the ground set is taken to be ``1..max label``. Pass ``n``
    when it exceeds 9 and no block has a comma, since ``12`` otherwise reads
    as the block ``{1, 2}``.
    """
    comma = "," in text or (n is not None and n > 9)
    sections = []
    seen = set()
    pos = 0
    for chunk in text.split("|"):
        blocks = []
        if chunk:
            offset = pos
            for token in chunk.split(" "):
                if not token:
                    raise ParseError("empty block (stray space)", offset)
                blocks.append(_parse_block(token, offset, comma, seen))
                offset += len(token) + 1
        sections.append(tuple(blocks))
        pos += len(chunk) + 1

    size = max(seen, default=0) if n is None else n
    if seen != set(range(1, size + 1)):
        raise ParseError(f"labels {sorted(seen)} are not exactly 1..{size}", 0)
    return BarredArrangement(tuple(sections), size)


def _parse_block(token: str, offset: int, comma: bool, seen: set) -> Block:
    if comma:
        parts, starts = token.split(","), []
        at = offset
        for p in parts:
            starts.append(at)
            at += len(p) + 1
    else:
        parts = list(token)
        starts = [offset + i for i in range(len(token))]
    block = set()
    for p, at in zip(parts, starts):
        if not p.isdigit() or not p.isascii() or p.startswith("0"):
            raise ParseError(f"bad label {p!r}", at)
        label = int(p)
        if label in seen:
            raise DuplicateLabel(f"label {label} appears twice", at)
        seen.add(label)
        block.add(label)
    return frozenset(block)
