"""Solving finite parity games and checking the answer.

Builds the short/long edge game on 0..15, solves it, verifies both positional
strategies, and compares against exhaustive strategy enumeration on a few
small random arenas.
"""
from churchsynth import catalog
from churchsynth.generate import random_arena
from churchsynth.parity import brute_force_regions, solve, verify_strategy

game = catalog.short_long_game(15)
regions, s_I, s_II = solve(game)
print(f"short/long game: {len(game.vertices)} vertices, I wins {len(regions.region_I)} of them")
print("I's moves:", {v: w for v, w in sorted(s_I.moves.items())})
print("strategy I verified:", bool(verify_strategy(game, s_I, regions.region_I)))

print("\nsmall random arenas against brute force:")
for seed in range(5):
    g = random_arena(seed, 6)
    r, a, b = solve(g)
    same = r == brute_force_regions(g)
    ok = verify_strategy(g, a, r.region_I) and verify_strategy(g, b, r.region_II)
    print(f"  seed {seed}: |W_I|={len(r.region_I)} |W_II|={len(r.region_II)} matches brute force: {same}, strategies verified: {bool(ok)}")
