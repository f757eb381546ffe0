import pytest
from hypothesis import given, settings, strategies as st

from churchsynth import catalog
from churchsynth.generate import bounded_pds, unbounded_pds
from churchsynth.parity import I, II, opponent, solve
from churchsynth.store import (
    POP,
    SKIP,
    BoundedCounterStore,
    DeadConfiguration,
    FrameStack,
    GreedyOpponent,
    PositionalOpponent,
    PushdownStore,
    RandomOpponent,
    Rule,
    StoreAutomaton,
    StoreError,
    expand_configuration_game,
    push,
    pushdown_automaton,
    simulate_store_strategy,
    solve_pushdown_game,
    store_strategy_from_positional,
)


def test_pushdown_store_ops():
    s = PushdownStore(("a", "b"))
    assert s.apply(push("a"), ()) == ("a",)
    assert s.apply(POP, ("a", "b")) == ("a",)
    assert s.apply(POP, ()) is None
    assert s.observe(()) is None and s.observe(("a", "b")) == "b"
    assert s.is_operation(push("b")) and not s.is_operation(push("c"))
    with pytest.raises(StoreError):
        PushdownStore(("a", "a"))


def test_counter_store_ops():
    c = BoundedCounterStore(2)
    assert [c.observe(v) for v in range(3)] == ["zero", "mid", "full"]
    assert c.apply(("inc",), 2) is None and c.apply(("dec",), 0) is None
    assert c.apply(("reset",), 2) == 0 and c.apply(SKIP, 1) == 1


def test_frame_stack_popmin():
    f = FrameStack()
    v = (FrameStack.BOTTOM, ("a", frozenset(), 3))
    v = f.apply(("push", ("b", frozenset(), 2)), v)
    assert f.observe(v) == ("b", frozenset(), 2)
    assert f.apply(("popmin", 5), v)[-1] == ("a", frozenset(), 2)
    assert f.apply(("popmin", 1), v)[-1] == ("a", frozenset(), 1)
    assert f.apply(("popmin", 0), (FrameStack.BOTTOM,)) is None
    # the bottom record keeps its empty low
    assert f.apply(("popmin", 0), v[:1] + (("a", frozenset(), 3),))[-1] == FrameStack.BOTTOM


def test_automaton_validation():
    with pytest.raises(StoreError):
        pushdown_automaton(("a",), {"q": I}, {"q": 0}, [Rule("q", "z", SKIP, "q")])
    with pytest.raises(StoreError):
        pushdown_automaton(("a",), {"q": I}, {"q": 0}, [Rule("q", None, push("z"), "q")])
    with pytest.raises(StoreError):
        pushdown_automaton(("a",), {"q": I}, {"q": 0}, [Rule("q", None, SKIP, "r")])


def counter_game():
    """I counts up; reaching full lets I reset into a color-0 loop. II at
    mid may force a reset to zero with color 1."""
    c = BoundedCounterStore(3)
    owner = {"up": I, "hold": II, "win": I}
    color = {"up": 2, "hold": 3, "win": 0}
    rules = []
    for obs in ("zero", "mid"):
        rules.append(Rule("up", obs, ("inc",), "hold"))
    rules.append(Rule("up", "full", ("reset",), "win"))
    rules.append(Rule("hold", "mid", SKIP, "up"))
    rules.append(Rule("hold", "full", SKIP, "up"))
    rules.append(Rule("hold", "mid", ("reset",), "up"))
    rules.append(Rule("win", "zero", SKIP, "win"))
    return StoreAutomaton.build(c, owner, color, rules)


def test_counter_game_expansion_and_positional_strategy():
    a = counter_game()
    exp = expand_configuration_game(a, [("up", 0)])
    assert exp.closed
    regions, s_I, s_II = solve(exp.arena)
    # II resets forever: the cycle up/hold has least color 2, so I still wins
    assert regions.winner_at(("up", 0)) == I
    strat = store_strategy_from_positional(exp, a, s_I, regions.region_I)
    for opp in (RandomOpponent(3), GreedyOpponent(II), PositionalOpponent(s_II)):
        res = simulate_store_strategy(a, strat, opp, ("up", 0), ("up", 0), steps=500)
        assert res.failure is None and res.favorable


def test_expansion_budget_and_dead_configuration():
    a = catalog.one_play_pusher(1)
    exp = expand_configuration_game(a, [("q", ())], node_budget=20)
    assert not exp.closed and exp.frontier
    dead = pushdown_automaton(("a",), {"q": I}, {"q": 0}, [Rule("q", None, push("a"), "q")])
    with pytest.raises(DeadConfiguration):
        expand_configuration_game(dead, [("q", ())])


@pytest.mark.parametrize("color,winner", [(1, II), (0, I), (3, II), (2, I)])
def test_one_play_pusher(color, winner):
    a = catalog.one_play_pusher(color)
    sol = solve_pushdown_game(a, "q")
    assert sol.winner == winner
    res = simulate_store_strategy(a, sol.strategy, RandomOpponent(0), ("q", ()), sol.start, steps=1000)
    assert res.failure is None and res.favorable


@pytest.mark.parametrize("height", [None, 2, 3])
def test_drain_game_won_by_I(height):
    a = catalog.drain_game(height)
    sol = solve_pushdown_game(a, "u")
    assert sol.winner == I
    for opp in (RandomOpponent(1), GreedyOpponent(II)):
        res = simulate_store_strategy(a, sol.strategy, opp, ("u", ()), sol.start, steps=10000)
        assert res.failure is None and res.lasso and res.favorable


def expansion_winner(a, state, stack=()):
    exp = expand_configuration_game(a, [(state, stack)], node_budget=50000)
    assert exp.closed
    regions, _, _ = solve(exp.arena)
    return regions.winner_at((state, stack)), exp


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 10**6), st.integers(1, 3))
def test_bounded_winner_matches_expansion(seed, height):
    a = bounded_pds(seed, height=height)
    win, exp = expansion_winner(a, "q0")
    sol = solve_pushdown_game(a, "q0")
    assert sol.winner == win
    res = simulate_store_strategy(a, sol.strategy, RandomOpponent(seed), ("q0", ()), sol.start, steps=2000)
    assert res.failure is None and res.favorable is not False


def test_nonempty_start_stack():
    for seed in range(8):
        a = bounded_pds(seed, height=3)
        stack = ("a1", "b2")
        win, _ = expansion_winner(a, "q1", stack)
        sol = solve_pushdown_game(a, "q1", stack)
        assert sol.winner == win
        assert len(sol.start[1]) == len(stack) + 1


def test_positional_opponent_replays_expansion():
    for seed in range(10):
        a = bounded_pds(seed)
        win, exp = expansion_winner(a, "q0")
        regions, s_I, s_II = solve(exp.arena)
        sol = solve_pushdown_game(a, "q0")
        opp = PositionalOpponent(s_II if sol.winner == I else s_I)
        res = simulate_store_strategy(a, sol.strategy, opp, ("q0", ()), sol.start, steps=2000)
        assert res.failure is None and res.favorable


def test_unbounded_simulations():
    for seed in range(1000, 1006):
        a = unbounded_pds(seed)
        sol = solve_pushdown_game(a, "q0")
        for opp in (RandomOpponent(seed), GreedyOpponent(opponent(sol.winner))):
            res = simulate_store_strategy(a, sol.strategy, opp, ("q0", ()), sol.start, steps=10000)
            assert res.failure is None
            assert res.lasso is not None and res.favorable


def test_simulation_reports_missing_rows():
    a = catalog.drain_game()
    sol = solve_pushdown_game(a, "u")
    broken = type(sol.strategy)(sol.strategy.player, sol.strategy.states, sol.strategy.store, {}, {})
    res = simulate_store_strategy(a, broken, RandomOpponent(0), ("u", ()), sol.start, steps=10)
    assert res.failure == "strategy undefined"


def test_claim_budget():
    with pytest.raises(StoreError):
        solve_pushdown_game(unbounded_pds(1001), "q0", node_budget=10)
