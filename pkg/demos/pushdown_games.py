"""Pushdown parity games won with a stack of frames.

Solves the drain game (I empties a stack that II keeps filling) and a random
unbounded instance, then plays the synthesized store strategy against a random
and a greedy opponent until the play closes a cycle.
"""
from churchsynth import catalog
from churchsynth.generate import unbounded_pds
from churchsynth.parity import opponent
from churchsynth.store import GreedyOpponent, RandomOpponent, simulate_store_strategy, solve_pushdown_game

for name, game, q in [("drain game", catalog.drain_game(), "u"), ("random pds 1003", unbounded_pds(1003), "q0")]:
    sol = solve_pushdown_game(game, q)
    print(f"{name}: {sol.winner} wins from ({q}, empty stack); reduced game has {sol.game_size} vertices")
    for opp in (RandomOpponent(1), GreedyOpponent(opponent(sol.winner))):
        res = simulate_store_strategy(game, sol.strategy, opp, (q, ()), sol.start, steps=10_000)
        print(f"  vs {type(opp).__name__}: cycle after {res.steps} steps, lowest color {res.cycle_min}, favorable: {res.favorable}")
