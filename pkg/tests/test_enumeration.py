from itertools import islice

import pytest
from hypothesis import given, strategies as st

from bpa.counting import Kind, barred_count, fubini, restricted_count
from bpa.enumeration import (
    BarredArrangement,
    DuplicateLabel,
    LimitExceeded,
    ParseError,
    bar_placements,
    canonical_render,
    count_by_enumeration,
    enum_barred,
    enum_preferential,
    enum_restricted,
    parse,
)
from bpa.exactmath import binomial
from oracles import barred_brute, render_tokens, restricted_brute


def fs(*labels):
    return frozenset(labels)


def test_preferential_small():
    assert [canonical_render(p) for p in enum_preferential(0)] == [""]
    assert len(list(enum_preferential(1))) == 1
    assert [canonical_render(p) for p in enum_preferential(2)] == ["12", "1 2", "2 1"]
    assert len(list(enum_preferential(3))) == 13


def test_preferential_counts():
    for n in range(8):
        assert sum(1 for _ in enum_preferential(n)) == fubini(n)


def test_canonical_order_of_preferential():
    def key(pa):
        return (len(pa.blocks), [sorted(b) for b in pa.blocks])

    for n in range(6):
        items = list(enum_preferential(n))
        assert [key(p) for p in items] == sorted(key(p) for p in items)


def test_every_arrangement_is_valid():
    for a in enum_barred(4, 2):
        a.validate()
    for a in enum_restricted(4, 3):
        a.validate()
    for a in enum_restricted(4, 2, free=0):
        a.validate()


def test_barred_matches_brute_force_sets():
    for n in range(4):
        for m in range(4):
            ours = {canonical_render(a) for a in enum_barred(n, m)}
            assert ours == {render_tokens(t) for t in barred_brute(n, m)}


def test_restricted_matches_brute_force_sets():
    for n in range(4):
        for m in range(4):
            ours = {canonical_render(a) for a in enum_restricted(n, m)}
            assert ours == {render_tokens(t) for t in restricted_brute(n, m)}
            first = {canonical_render(a) for a in enum_restricted(n, m, free=0)}
            assert first == {render_tokens(t) for t in restricted_brute(n, m, 0)}


def test_one_bar_on_two_block_arrangement():
    blocks = (fs(1), fs(2, 3))
    placed = [canonical_render(BarredArrangement(s, 3)) for s in bar_placements(blocks, 1)]
    assert placed == ["|1 23", "1|23", "1 23|"]
    two = {canonical_render(BarredArrangement(s, 3)) for s in bar_placements(blocks, 2)}
    assert two == {"1||23", "||1 23", "1 23||", "1|23|", "|1 23|", "|1|23"}


def test_q21_listing():
    got = {canonical_render(a) for a in enum_barred(2, 1)}
    assert got == {"|12", "12|", "1 2|", "2 1|", "|1 2", "|2 1", "1|2", "2|1"}


def test_stream_counts_and_placements():
    for n in range(7):
        for m in range(4):
            assert sum(1 for _ in enum_barred(n, m)) == barred_count(n, m)
            assert sum(1 for _ in enum_restricted(n, m)) == restricted_count(n, m)
    for pa in enum_preferential(4):
        for m in range(4):
            k = len(pa.blocks)
            assert sum(1 for _ in bar_placements(pa.blocks, m)) == binomial(k + m, m)


def test_streams_have_no_duplicates():
    for n in range(5):
        for m in range(3):
            rendered = [canonical_render(a) for a in enum_barred(n, m)]
            assert len(rendered) == len(set(rendered))
            rendered = [canonical_render(a) for a in enum_restricted(n, m)]
            assert len(rendered) == len(set(rendered))


def test_streams_are_lazy():
    first = next(iter(enum_barred(12, 3)))
    assert canonical_render(first) == "|||1,2,3,4,5,6,7,8,9,10,11,12"
    assert len(list(islice(enum_restricted(20, 4), 5))) == 5


def test_restricted_empty_set():
    assert [canonical_render(a) for a in enum_restricted(0, 3)] == ["|||"]
    assert {canonical_render(a) for a in enum_restricted(1, 1)} == {"1|", "|1"}


def test_count_by_enumeration():
    assert count_by_enumeration(4, 5, Kind.BARRED) == 5340
    assert count_by_enumeration(2, 2, "restricted") == 11
    assert count_by_enumeration(0, 0) == 1


def test_count_by_enumeration_limit():
    with pytest.raises(LimitExceeded):
        count_by_enumeration(9, 0)
    with pytest.raises(LimitExceeded):
        count_by_enumeration(4, 1, limit=3)
    assert count_by_enumeration(4, 1, limit=None) == barred_count(4, 1)


# -- text form --------------------------------------------------------------


def test_render_examples():
    assert canonical_render(BarredArrangement(((fs(1), fs(2, 3)),), 3)) == "1 23"
    assert canonical_render(BarredArrangement(((), (), ()), 0)) == "||"
    a = BarredArrangement(((fs(7), fs(4, 3), fs(1)), (fs(6, 5, 2),), (), ()), 7)
    assert canonical_render(a) == "7 34 1|256||"


def test_parse_examples():
    a = parse("1 23")
    assert a.sections == ((fs(1), fs(2, 3)),) and a.n == 3 and a.bars == 0
    b = parse("1|")
    assert b.sections == ((fs(1),), ()) and b.bars == 1
    assert parse("||") == BarredArrangement(((), (), ()), 0)
    assert parse("7 34 1|256||").sections[0][1] == fs(3, 4)


def test_parse_duplicate_label():
    with pytest.raises(DuplicateLabel) as info:
        parse("1 1|")
    assert info.value.position == 2
    with pytest.raises(DuplicateLabel):
        parse("12|2")


@pytest.mark.parametrize(
    "text,pos", [("1  2", 2), (" 1", 0), ("1 |2", 2), ("1 0", 2), ("1 a", 2), ("13", 0)]
)
def test_parse_errors(text, pos):
    with pytest.raises(ParseError) as info:
        parse(text)
    assert info.value.position == pos


def test_parse_with_declared_n():
    with pytest.raises(ParseError):
        parse("1 2", n=3)
    a = parse("10 1,2,3|4,5,6,7,8,9,11", n=11)
    assert a.sections[0][0] == fs(10)
    assert canonical_render(a) == "10 1,2,3|4,5,6,7,8,9,11"


def test_round_trip_full_streams():
    for n in range(5):
        for m in range(3):
            for a in enum_barred(n, m):
                assert parse(canonical_render(a)) == a
            for a in enum_restricted(n, m):
                assert parse(canonical_render(a)) == a


@given(st.integers(10, 14), st.integers(0, 3), st.integers(0, 300))
def test_round_trip_large_labels(n, m, skip):
    a = next(islice(enum_barred(n, m), skip, None))
    assert parse(canonical_render(a), n=n) == a
