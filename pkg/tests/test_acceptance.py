"""The eight acceptance criteria, each at its stated scale and time limit.

Run under pytest, or directly with ``python tests/test_acceptance.py`` for a
plain PASS/FAIL listing.
"""
import contextlib
import io
import random
import sys
import tempfile
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent))

import conftest
from oracles import language_edges, memoryless, opponent_can_win

from churchsynth import catalog
from churchsynth import formats as F
from churchsynth.cli import main as cli_main
from churchsynth.generate import (
    bounded_pds,
    exhaustive_arenas,
    random_arena,
    random_dfa,
    random_labelled_graph,
    random_lasso,
    random_represented_game,
    unbounded_pds,
)
from churchsynth.labelled import edges_by_language, normalize_dfa, represent_by_regexp
from churchsynth.parity import I, II, brute_force_regions, opponent, solve, strategy_wins_everywhere, verify_strategy
from churchsynth.representation import (
    GraphRepresentation,
    build_game_representation,
    induced_edges,
    pull_back_strategy,
)
from churchsynth.store import (
    GreedyOpponent,
    RandomOpponent,
    expand_configuration_game,
    simulate_store_strategy,
    solve_pushdown_game,
)
from churchsynth.synthesis import (
    LassoWordPair,
    check_pair,
    check_pair_elgame,
    decide_realizability,
    extract_transducer,
    synthesize_from_elgame,
    transducer_run,
)

DATA = Path(__file__).resolve().parent.parent / "demos" / "data"


def record(k, ok, detail):
    line = f"{'PASS' if ok else 'FAIL'}  criterion {k}: {detail}"
    conftest.ACCEPTANCE.append(line)
    print(line)
    return ok


def arena_family():
    """Every arena on at most 3 vertices (up to relabelling), 3000 seeded
    arenas on 4 and 5 vertices, and 1000 seeded arenas on 1 to 8 vertices."""
    for n in (1, 2, 3):
        yield from exhaustive_arenas(n, colors=4)
    rng = random.Random(2024)
    for i in range(3000):
        yield random_arena(rng, 4 + i % 2, max_out=3, colors=4)
    rng = random.Random(8)
    for _ in range(1000):
        yield random_arena(rng, rng.randint(1, 8), max_out=3, colors=4)


# -- 1 -----------------------------------------------------------------------


def criterion_1():
    t0 = time.perf_counter()
    count = mismatches = bad_strategies = 0
    for g in arena_family():
        count += 1
        regions, s_I, s_II = solve(g)
        if regions != brute_force_regions(g):
            mismatches += 1
        if not (verify_strategy(g, s_I, regions.region_I) and verify_strategy(g, s_II, regions.region_II)):
            bad_strategies += 1
    dt = time.perf_counter() - t0
    ok = mismatches == 0 and bad_strategies == 0 and dt < 60
    return record(1, ok, f"{count} arenas, {mismatches} region mismatches, {bad_strategies} unverified strategies, {dt:.1f}s (< 60s)")


def test_criterion_1_solver_matches_oracle():
    assert criterion_1()


# -- 2 -----------------------------------------------------------------------


def criterion_2():
    t0 = time.perf_counter()
    count = not_partition = beaten = exhaustive = 0
    for g in arena_family():
        count += 1
        regions, s_I, _ = solve(g)
        vs = set(g.vertices)
        if regions.region_I | regions.region_II != vs or regions.region_I & regions.region_II:
            not_partition += 1
        if len(vs) <= 5:
            exhaustive += 1
            if strategy_wins_everywhere(g, s_I, regions.region_I) is not None:
                beaten += 1
    dt = time.perf_counter() - t0
    ok = not_partition == 0 and beaten == 0
    return record(
        2, ok,
        f"{count} arenas partitioned ({not_partition} failures); {exhaustive} with <= 5 vertices, "
        f"I's strategy beaten {beaten} times by a memoryless opponent, {dt:.1f}s",
    )


def test_criterion_2_determinacy_and_uniformity():
    assert criterion_2()


# -- 3 -----------------------------------------------------------------------


def criterion_3():
    g, dfa = catalog.line_graph(12), catalog.line_dfa()
    expected = {(a, b) for a in range(13) for b in range(13) if (b - a) % 3 == 0}
    got = edges_by_language(g, dfa).pairs
    norm = normalize_dfa(dfa)
    big = represent_by_regexp(g, norm)
    rep = GraphRepresentation(big, frozenset((v, norm.initial) for v in g.vertices))
    induced = {(a[0], b[0]) for a, b in induced_edges(rep)}
    ok = got == expected and induced == expected
    return record(3, ok, f"line 0..12: {len(expected)} expected pairs, language edges match={got == expected}, induced match={induced == expected}")


def test_criterion_3_line_graph_golden():
    assert criterion_3()


# -- 4 -----------------------------------------------------------------------


def criterion_4():
    t0 = time.perf_counter()
    rng = random.Random(44)
    lang_bad = 0
    for _ in range(200):
        n, q = rng.randint(1, 6), rng.randint(1, 4)
        g = random_labelled_graph(rng, n)
        dfa = random_dfa(rng, q)
        expected = edges_by_language(g, dfa).pairs
        norm = normalize_dfa(dfa)
        rep = GraphRepresentation(represent_by_regexp(g, norm), frozenset((v, norm.initial) for v in g.vertices))
        induced = {(a[0], b[0]) for a, b in induced_edges(rep)}
        if induced != expected or expected != language_edges(g, dfa):
            lang_bad += 1
    game_bad = 0
    for _ in range(200):
        game, grep = random_represented_game(rng, rng.randint(1, 6))
        rep = build_game_representation(game, grep)
        big, b_I, b_II = solve(rep.arena)
        regions, _, _ = solve(game)
        projected = {v for v in game.vertices if big.winner_at(rep.embed[v]) == I}
        pulled, p_I, p_II = pull_back_strategy(rep, big, b_I, b_II)
        if (
            projected != regions.region_I
            or pulled != regions
            or not verify_strategy(game, p_I, regions.region_I)
            or not verify_strategy(game, p_II, regions.region_II)
        ):
            game_bad += 1
    dt = time.perf_counter() - t0
    ok = lang_bad == 0 and game_bad == 0 and dt < 120
    return record(4, ok, f"200 (G, Dfa): {lang_bad} mismatches; 200 represented games: {game_bad} failures; {dt:.1f}s (< 120s)")


def test_criterion_4_representation_round_trip():
    assert criterion_4()


# -- 5 -----------------------------------------------------------------------


def criterion_5():
    rep = catalog.short_long_representation(15)
    expected = {(x, y) for x in range(16) for y in range(16) if y - x == 1 or (y > x and (y - x) % 3 == 0)}
    induced = set(induced_edges(rep))
    return record(5, induced == expected, f"short/long edges on 0..15: {len(induced)} induced, {len(expected)} expected, exact={induced == expected}")


def test_criterion_5_short_long_golden():
    assert criterion_5()


# -- 6 -----------------------------------------------------------------------


def unbounded_instances():
    yield "one-play pusher, color 1", catalog.one_play_pusher(1), "q", II
    yield "one-play pusher, color 0", catalog.one_play_pusher(0), "q", I
    yield "drain game", catalog.drain_game(), "u", I
    for seed in range(1000, 1017):
        yield f"unbounded_pds({seed})", unbounded_pds(seed), "q0", None


def criterion_6():
    t0 = time.perf_counter()
    disagree = 0
    for seed in range(50):
        a = bounded_pds(seed, height=1 + seed % 3)
        exp = expand_configuration_game(a, [("q0", ())], node_budget=100000)
        regions, _, _ = solve(exp.arena)
        if solve_pushdown_game(a, "q0").winner != regions.winner_at(("q0", ())):
            disagree += 1
    failures = []
    closed = runs = 0
    for name, a, q, forced in unbounded_instances():
        sol = solve_pushdown_game(a, q)
        if forced is not None and sol.winner != forced:
            failures.append(f"{name}: winner {sol.winner}")
        for opp in (RandomOpponent(7), GreedyOpponent(opponent(sol.winner))):
            runs += 1
            res = simulate_store_strategy(a, sol.strategy, opp, (q, ()), sol.start, steps=10_000)
            if res.failure:
                failures.append(f"{name}: {res.failure}")
            elif res.lasso is not None:
                closed += 1
                if not res.favorable:
                    failures.append(f"{name}: unfavorable lasso")
    dt = time.perf_counter() - t0
    ok = disagree == 0 and not failures and dt < 300
    detail = f"50 bounded: {disagree} disagreements; 20 unbounded x 2 opponents: {runs} runs, {closed} closed lassos, {len(failures)} failures; {dt:.1f}s (< 300s)"
    if failures:
        detail += " " + "; ".join(failures[:3])
    return record(6, ok, detail)


def test_criterion_6_pushdown_certification():
    assert criterion_6()


# -- 7 -----------------------------------------------------------------------


def criterion_7():
    t0 = time.perf_counter()
    rng = random.Random(77)
    notes = []
    acc = catalog.equality_acceptor()
    res = decide_realizability(acc)
    t = extract_transducer(acc, res.output_strategy, res.regions)
    copy = res.realizable and all(t.delta[("ok", a)] == ("ok", a) for a in acc.inputs)
    eq_fail = 0
    for _ in range(500):
        x = random_lasso(rng, acc.inputs)
        if not check_pair(acc, LassoWordPair(x, transducer_run(t, x))):
            eq_fail += 1
    notes.append(f"equality copy={copy} failures={eq_fail}/500")

    pred = catalog.predictor_acceptor()
    pres = decide_realizability(pred)
    start = ("orig", pred.initial)
    winners = sum(1 for m in memoryless(pres.arena, I) if start not in opponent_can_win(pres.arena, I, m))
    notes.append(f"predictor unrealizable={not pres.realizable} ({len(pres.arena.vertices)}-vertex game, {winners} winning output strategies)")

    game = catalog.echo_parity_elgame()
    syn = synthesize_from_elgame(game)
    minima = syn.realizable and all(label == syn.transducer.dom_out.least(cls) for cls, _, label in syn.transducer.rows["ok"])
    echo_fail = 0
    for _ in range(500):
        x = random_lasso(rng, range(1000))
        if not check_pair_elgame(game, LassoWordPair(x, transducer_run(syn.transducer, x))):
            echo_fail += 1
    notes.append(f"echo-parity class minima={minima} failures={echo_fail}/500")
    dt = time.perf_counter() - t0
    ok = copy and eq_fail == 0 and not pres.realizable and winners == 0 and minima and echo_fail == 0 and dt < 60
    return record(7, ok, "; ".join(notes) + f"; {dt:.1f}s (< 60s)")


def test_criterion_7_church_pipeline():
    assert criterion_7()


# -- 8 -----------------------------------------------------------------------


def _run_cli(argv):
    buf = io.StringIO()
    with contextlib.redirect_stdout(buf):
        code = cli_main([str(a) for a in argv])
    return code, buf.getvalue()


CLI_RUNS = [
    ["solve", DATA / "short_long.arena"],
    ["represent", DATA / "line.lgraph", DATA / "line.dfa"],
    ["represent", DATA / "short_long.arena", DATA / "short_long.graph"],
    ["pushdown", DATA / "drain.pds", "--seed", 3],
    ["pushdown", DATA / "one_play_pusher.pds"],
    ["church", DATA / "equality.acceptor", "--seed", 5],
    ["church", DATA / "predictor.acceptor"],
    ["church", DATA / "echo_parity.elgame", "--seed", 5],
    ["generate", "arena", "--seed", 9, "--size", 7],
    ["generate", "pds", "--seed", 9],
]


def criterion_8():
    differing = []
    with tempfile.TemporaryDirectory() as tmp:
        for argv in CLI_RUNS:
            outs = []
            for rep in range(2):
                d = Path(tmp) / f"{argv[0]}{CLI_RUNS.index(argv)}_{rep}"
                for fmt in ("text", "structured"):
                    code, out = _run_cli(argv + ["--format", fmt, "--emit-dir", d])
                    outs.append((code, out))
                outs.append({p.name: p.read_text() for p in sorted(d.glob("*"))} if d.exists() else {})
            if outs[:3] != outs[3:]:
                differing.append(" ".join(map(str, argv[:2])))
        # a random stored instance pushed through every emitter and parser
        reparse_bad = _reparse_failures(Path(tmp))
    ok = not differing and not reparse_bad
    detail = f"{len(CLI_RUNS)} invocations x 2 formats repeated: {len(differing)} differ; re-parse failures: {len(reparse_bad)}"
    if differing or reparse_bad:
        detail += " " + "; ".join(differing + reparse_bad)
    return record(8, ok, detail)


def _reparse_failures(tmp):
    bad = []
    for seed in range(10):
        a = unbounded_pds(seed) if seed % 2 else bounded_pds(seed)
        sol = solve_pushdown_game(a, "q0")
        text = F.emit_store_strategy(sol.strategy, sol.start)
        s, start = F.parse_store_strategy(text)
        if (s.choose, s.update, s.player, start) != (sol.strategy.choose, sol.strategy.update, sol.strategy.player, sol.start):
            bad.append(f"store strategy {seed}")
        g = random_arena(seed, 6)
        _, s_I, s_II = solve(g)
        for strat in (s_I, s_II):
            if F.parse_strategy(F.emit_strategy(strat)).moves != {str(v): str(w) for v, w in strat.moves.items()}:
                bad.append(f"positional strategy {seed}")
    for make in (catalog.equality_acceptor, catalog.all_even_acceptor):
        acc = make()
        res = decide_realizability(acc)
        tr = extract_transducer(acc, res.output_strategy, res.regions)
        if F.parse_transducer(F.emit_transducer(tr)) != tr:
            bad.append(f"transducer {make.__name__}")
    tr = synthesize_from_elgame(catalog.echo_parity_elgame()).transducer
    back = F.parse_transducer(F.emit_transducer(tr))
    if (back.rows, back.nodes, back.initial, back.dom_in, back.dom_out) != (tr.rows, tr.nodes, tr.initial, tr.dom_in, tr.dom_out):
        bad.append("class transducer")
    # files written by the CLI re-parse and re-emit to the same bytes
    for p in sorted(tmp.rglob("*.txt")):
        text = p.read_text()
        kind = F.sniff(text)
        if kind == "storestrategy":
            again = F.emit_store_strategy(*F.parse_store_strategy(text))
        elif kind == "transducer":
            again = F.emit_transducer(F.parse_transducer(text))
        elif kind == "strategy":
            again = F.emit_strategy(F.parse_strategy(text))
        elif kind == "graph":
            again = F.emit_graph_representation(F.parse_graph_representation(text))
        else:
            continue
        if again != text:
            bad.append(p.name)
    return bad


def test_criterion_8_determinism():
    assert criterion_8()


if __name__ == "__main__":
    results = [c() for c in (criterion_1, criterion_2, criterion_3, criterion_4, criterion_5, criterion_6, criterion_7, criterion_8)]
    sys.exit(0 if all(results) else 1)
