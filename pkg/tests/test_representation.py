import pytest
from hypothesis import given, settings, strategies as st

from churchsynth import catalog
from churchsynth.generate import random_represented_game
from churchsynth.labelled import Digraph
from churchsynth.parity import I, II, solve, validate_arena, verify_strategy
from churchsynth.representation import (
    GameRepresentation,
    GraphRepresentation,
    RepresentationError,
    build_game_representation,
    copy_graph,
    induced_edges,
    project,
    proper_palette,
    pull_back_strategy,
    represents,
    validate_game_representation,
)

from oracles import regions_by_enumeration


def test_short_long_edges():
    rep = catalog.short_long_representation(15)
    assert induced_edges(rep) == catalog.short_long_expected(15)
    assert rep.big.max_out_degree() <= 2


def test_short_long_game_regions_survive_representation():
    game = catalog.short_long_game(15)
    rep = build_game_representation(game, catalog.short_long_representation(15, close=True))
    big, b_I, b_II = solve(rep.arena)
    regions, _, _ = solve(game)
    pulled, p_I, p_II = pull_back_strategy(rep, big, b_I, b_II)
    assert pulled == regions
    assert verify_strategy(game, p_I, regions.region_I)
    assert verify_strategy(game, p_II, regions.region_II)


def test_copies_and_projection():
    g = Digraph.build([0, 1], [(0, 1), (1, 1)])
    c = copy_graph(g, 3)
    assert len(c.graph.vertices) == 6 and len(c.graph.edges) == 6
    assert all(a[1] == b[1] for a, b in c.graph.edges)
    p = project(c, 2)
    assert p.edges == {((0, 2), (1, 2)), ((1, 2), (1, 2))}
    with pytest.raises(RepresentationError):
        copy_graph(g, 0)
    with pytest.raises(RepresentationError):
        project(c, 3)


def test_represents_direct_and_via_proper():
    big = Digraph.build(["a", "b", "p"], [("a", "p"), ("p", "b"), ("b", "a")])
    rep = GraphRepresentation(big, frozenset({"a", "b"}))
    assert induced_edges(rep) == {("a", "b"), ("b", "a")}
    assert represents(rep, Digraph.build(["a", "b"], [("a", "b"), ("b", "a")]))
    with pytest.raises(RepresentationError):
        GraphRepresentation(big, frozenset({"z"}))


def test_build_rejects_wrong_graph():
    game = catalog.short_long_game(6)
    with pytest.raises(RepresentationError):
        build_game_representation(game, catalog.short_long_representation(6, close=False))


def test_palette_above_every_g_color():
    game = catalog.short_long_game(9)
    odd, even = proper_palette(game)
    top = max(game.color.values()) + 2
    assert odd % 2 == 1 and even % 2 == 0 and min(odd, even) > top


def test_validation_catches_bad_proper_color():
    game = catalog.short_long_game(6)
    rep = build_game_representation(game, catalog.short_long_representation(6, close=True))
    color = dict(rep.arena.color)
    proper = next(v for v in rep.arena.vertices if v not in rep.gvertices and v[1] == 0)
    color[proper] = 0
    arena = validate_arena(rep.arena.vertices, rep.arena.edges, rep.arena.owner, color)
    with pytest.raises(RepresentationError):
        validate_game_representation(GameRepresentation(game, arena, rep.embed))


def test_dead_end_proper_vertex_gets_loop():
    game = validate_arena(["a"], [("a", "a")], {"a": I}, {"a": 0})
    big = Digraph.build(["a", "p", "q"], [("a", "a"), ("a", "p"), ("p", "a"), ("p", "q")])
    rep = build_game_representation(game, GraphRepresentation(big, frozenset({"a"})))
    assert (("q", 0), ("q", 0)) in rep.arena.edges


def test_low_proper_palette_breaks_region_identity_somewhere():
    # low proper colors let a player stall on its own proper vertices
    broken = 0
    for seed in range(60):
        game, grep = random_represented_game(seed, 5)
        rep = build_game_representation(game, grep, proper_colors=(1, 0), check=False)
        big, _, _ = solve(rep.arena)
        regions, _, _ = solve(game)
        if any(big.winner_at(rep.embed[v]) != regions.winner_at(v) for v in game.vertices):
            broken += 1
    assert broken > 0


@settings(max_examples=80, deadline=None)
@given(st.integers(0, 10**6), st.integers(1, 6))
def test_region_identity_and_pull_back(seed, n):
    game, grep = random_represented_game(seed, n)
    rep = build_game_representation(game, grep)
    big, b_I, b_II = solve(rep.arena)
    exact = regions_by_enumeration(game)
    for v in game.vertices:
        assert (big.winner_at(rep.embed[v]) == I) == (v in exact[0])
    pulled, p_I, p_II = pull_back_strategy(rep, big, b_I, b_II)
    assert (pulled.region_I, pulled.region_II) == exact
    assert verify_strategy(game, p_I, pulled.region_I)
    assert verify_strategy(game, p_II, pulled.region_II)
    assert {rep.arena.owner[rep.embed[v]] for v in game.vertices if game.owner[v] == II} <= {II}
