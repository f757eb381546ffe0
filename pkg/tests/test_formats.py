import pytest
from hypothesis import given, settings, strategies as st

from churchsynth import catalog
from churchsynth import formats as F
from churchsynth.generate import bounded_pds, random_arena, random_dfa, random_labelled_graph, random_represented_game, unbounded_pds
from churchsynth.parity import solve, validate_arena
from churchsynth.representation import build_game_representation
from churchsynth.store import solve_pushdown_game
from churchsynth.synthesis import (
    acceptor_to_elgame,
    decide_realizability,
    extract_transducer,
    synthesize_from_elgame,
)


def stringly(arena):
    """Same arena with string ids, the form the parser produces."""
    s = str
    return validate_arena(
        [s(v) for v in arena.vertices],
        [(s(a), s(b)) for a, b in arena.edges],
        {s(v): o for v, o in arena.owner.items()},
        {s(v): c for v, c in arena.color.items()},
    )


def same_arena(a, b):
    return (
        set(a.vertices) == set(b.vertices)
        and a.edges == b.edges
        and dict(a.owner) == dict(b.owner)
        and dict(a.color) == dict(b.color)
    )


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10**6), st.integers(1, 9))
def test_arena_and_strategy_round_trip(seed, n):
    a = stringly(random_arena(seed, n))
    text = F.emit_arena(a)
    b = F.parse_arena(text)
    assert same_arena(a, b) and F.emit_arena(b) == text
    _, s_I, s_II = solve(a)
    for s in (s_I, s_II):
        t = F.emit_strategy(s)
        assert F.parse_strategy(t) == s


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**6), st.integers(1, 6), st.integers(1, 4))
def test_lgraph_and_dfa_round_trip(seed, n, q):
    g = random_labelled_graph(seed, n)
    t = F.emit_lgraph(g)
    assert F.emit_lgraph(F.parse_lgraph(t)) == t
    d = random_dfa(seed, q)
    t = F.emit_dfa(d)
    back = F.parse_dfa(t)
    assert F.emit_dfa(back) == t
    assert back.accepting == {str(x) for x in d.accepting}


def test_dfa_requires_one_initial():
    with pytest.raises(F.FormatError):
        F.parse_dfa("dfa\nalphabet a\nstate p\ntrans p a p\n")


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 10**6), st.integers(1, 6))
def test_game_representation_round_trip(seed, n):
    game, grep = random_represented_game(seed, n)
    t = F.emit_graph_representation(grep)
    assert F.emit_graph_representation(F.parse_graph_representation(t)) == t
    rep = build_game_representation(game, grep)
    text = F.emit_game_representation(rep)
    arena, gv = F.parse_represented_arena(text)
    assert len(arena.vertices) == len(rep.arena.vertices)
    assert gv == {f"{v}@{j}" for v, j in rep.gvertices}
    assert F.emit_arena(arena, extra=["gvertices " + " ".join(sorted(gv))]) == text


@settings(max_examples=20, deadline=None)
@given(st.integers(0, 10**6), st.booleans())
def test_pds_and_store_strategy_round_trip(seed, bounded):
    a = bounded_pds(seed) if bounded else unbounded_pds(seed)
    text = F.emit_pds(a, ("q0", ()))
    b, start = F.parse_pds(text)
    assert start == ("q0", ()) and b.rules == a.rules and F.emit_pds(b, start) == text
    sol = solve_pushdown_game(a, "q0")
    t = F.emit_store_strategy(sol.strategy, sol.start)
    s, s_start = F.parse_store_strategy(t)
    assert s.choose == sol.strategy.choose and s.update == sol.strategy.update
    assert s.player == sol.strategy.player and s.store == sol.strategy.store
    assert s_start == sol.start and F.emit_store_strategy(s, s_start) == t


def test_pds_start_with_stack():
    a, start = F.parse_pds("pds\ngamma a\nstate q owner=I color=0\nrule q top=a skip q\nstart q a a\n")
    assert start == ("q", ("a", "a"))


@pytest.mark.parametrize("make", [catalog.equality_acceptor, catalog.predictor_acceptor, catalog.all_even_acceptor])
def test_acceptor_and_transducer_round_trip(make):
    acc = make()
    t = F.emit_acceptor(acc)
    back = F.parse_acceptor(t)
    assert back == acc
    res = decide_realizability(acc)
    tr = extract_transducer(acc, res.output_strategy, res.regions)
    tt = F.emit_transducer(tr)
    assert F.parse_transducer(tt) == tr
    g = acceptor_to_elgame(acc)
    et = F.emit_elgame(g)
    assert F.emit_elgame(F.parse_elgame(et)) == et


def test_elgame_and_class_transducer_round_trip():
    g = catalog.echo_parity_elgame()
    t = F.emit_elgame(g)
    back = F.parse_elgame(t)
    assert back.rows == g.rows and back.color == g.color and back.initial == g.initial
    tr = synthesize_from_elgame(g).transducer
    tt = F.emit_transducer(tr)
    again = F.parse_transducer(tt)
    assert again.rows == tr.rows and again.dom_in == tr.dom_in and F.emit_transducer(again) == tt


BAD = [
    (F.parse_arena, "arena\nvertex a owner=I\nedge a a\n"),
    (F.parse_arena, "arena\nvertex a owner=X color=0\nedge a a\n"),
    (F.parse_arena, "arena\nvertex a owner=I color=-1\n"),
    (F.parse_arena, "graph\n"),
    (F.parse_arena, "arena\nvertex a owner=I color=0\nvertex a owner=I color=0\n"),
    (F.parse_arena, "arena\nfoo\n"),
    (F.parse_arena, ""),
    (F.parse_strategy, "strategy\nmove a b\n"),
    (F.parse_pds, "pds\nstate q owner=I color=0\n"),
    (F.parse_pds, "pds\ngamma a\nstate q owner=I color=0\nrule q a skip q\n"),
    (F.parse_acceptor, "acceptor\nin a\nout b\nnode s color=0\n"),
    (F.parse_elgame, "elgame\nin nat\nout nat\nnode s side=left color=0 initial\n"),
    (F.parse_store_strategy, "storestrategy player=I\nchoose q -|-|- ; skip ; q\n"),
]


@pytest.mark.parametrize("parse,text", BAD)
def test_malformed_input_is_a_value_error(parse, text):
    with pytest.raises(ValueError):
        parse(text)


def test_comments_and_blank_lines():
    a = F.parse_arena("# a comment\n\narena\nvertex v owner=I color=0  # trailing\nedge v v\n")
    assert a.vertices == ("v",)


def test_id_collision_detected():
    with pytest.raises(F.FormatError):
        F.id_table([("a", "b"), "a_b"])
