import pytest
from hypothesis import given, settings, strategies as st

from churchsynth.semilinear import SemilinearError, SemilinearSet, format_class, parse_class

from oracles import progression_members

BOUND = 200
progs = st.lists(st.tuples(st.integers(0, 12), st.integers(0, 6)), min_size=0, max_size=4)


def members(s):
    return {x for x in range(BOUND) if s.contains(x)}


@settings(max_examples=300, deadline=None)
@given(progs, progs)
def test_boolean_operations_match_brute_force(p, q):
    a, b = SemilinearSet.union_of(p), SemilinearSet.union_of(q)
    ma, mb = progression_members(p, BOUND), progression_members(q, BOUND)
    assert members(a) == ma
    assert members(a | b) == ma | mb
    assert members(a & b) == ma & mb
    assert members(a - b) == ma - mb
    assert members(a.complement()) == set(range(BOUND)) - ma
    assert a.least() == (min(ma) if ma else None)
    assert a.is_empty() == (not ma)
    assert (a == b) == (ma == mb)
    if a == b:
        assert hash(a) == hash(b)


@settings(max_examples=200, deadline=None)
@given(progs.filter(bool))
def test_format_parse_round_trip(p):
    s = SemilinearSet.union_of(p)
    text = format_class(s)
    back = parse_class(text)
    assert back == s and format_class(back) == text
    # the canonical description also reparses to the same set
    plain = SemilinearSet(s.threshold, s.period, s.low, s.residues)
    assert parse_class(format_class(plain)) == s


def test_examples():
    evens = parse_class("lin{0+2*N}")
    odds = parse_class("lin{1+2*N}")
    assert (evens | odds).is_full() and evens.isdisjoint(odds)
    assert parse_class("finite{3,5}").is_finite() and parse_class("finite{3,5}").least() == 3
    assert parse_class("lin{7}").members_below(10) == [7]
    assert not evens.is_finite()
    assert parse_class("finite{a,c}", letters=("a", "b", "c")) == frozenset({"a", "c"})
    assert format_class(frozenset({"c", "a"}), ("c", "b", "a")) == "finite{c,a}"


@pytest.mark.parametrize("bad", ["lin{}", "lin{x}", "finite{}", "range{1}", "finite{a}"])
def test_parse_errors(bad):
    with pytest.raises(SemilinearError):
        parse_class(bad)


def test_letters_outside_alphabet():
    with pytest.raises(SemilinearError):
        parse_class("finite{z}", letters=("a",))


def test_negative_rejected():
    with pytest.raises(SemilinearError):
        SemilinearSet.progression(-1, 2)
