"""``churchsynth`` command line.

Every subcommand builds a report (a nested dict), prints it as ``key: value``
lines or as JSON, and exits 0 on success, 2 when an input fails to parse or
validate, and 3 when the verdict is negative: a game lost by player I, an
unrealizable specification, or any failed check.
"""
from __future__ import annotations

import argparse
import json
import random
import sys
import time
from pathlib import Path

from . import formats as F
from .generate import bounded_pds, random_arena, random_dfa, random_labelled_graph, random_lasso, unbounded_pds
from .labelled import edges_by_language, normalize_dfa, represent_by_regexp
from .parity import I, opponent, solve, verify_strategy
from .regex import compile_regex
from .representation import (
    GraphRepresentation,
    build_game_representation,
    induced_edges,
    pull_back_strategy,
)
from .store import (
    GreedyOpponent,
    RandomOpponent,
    StoreError,
    expand_configuration_game,
    simulate_store_strategy,
    solve_pushdown_game,
)
from .synthesis import (
    LassoWordPair,
    check_pair,
    check_pair_elgame,
    decide_realizability,
    extract_transducer,
    synthesize_from_elgame,
    transducer_run,
)

OK, INVALID, NEGATIVE = 0, 2, 3


def _read(path) -> str:
    return Path(path).read_text()


def _names(vs):
    return sorted(F.fmt_id(v) for v in vs)


def _moves(strategy):
    return sorted(f"{F.fmt_id(v)} {F.fmt_id(w)}" for v, w in strategy.moves.items())


def _emit(args, name, text):
    if args.emit_dir:
        d = Path(args.emit_dir)
        d.mkdir(parents=True, exist_ok=True)
        (d / name).write_text(text)


# -- subcommands -------------------------------------------------------------


def cmd_solve(args):
    arena = F.parse_arena(_read(args.arena))
    regions, s_I, s_II = solve(arena)
    checks = {}
    for s in (s_I, s_II):
        v = verify_strategy(arena, s, regions.of(s.player))
        checks[s.player] = "ok" if v else f"failed: {v.reason}"
        _emit(args, f"strategy_{s.player}.txt", F.emit_strategy(s))
    report = {
        "command": "solve",
        "vertices": len(arena.vertices),
        "region_I": _names(regions.region_I),
        "region_II": _names(regions.region_II),
        "strategy_I": _moves(s_I),
        "strategy_II": _moves(s_II),
        "verification": checks,
    }
    bad = any(c != "ok" for c in checks.values())
    return report, NEGATIVE if bad else OK


def cmd_represent(args):
    first = _read(args.first)
    kind = F.sniff(first)
    if kind == "lgraph":
        return _represent_language(args, F.parse_lgraph(first))
    if kind == "arena":
        if args.second is None:
            raise F.FormatError("represent ARENA needs a graph representation file")
        game = F.parse_arena(first)
        rep = F.parse_graph_representation(_read(args.second))
        return _represent_game(args, game, rep)
    raise F.FormatError(f"represent expects an lgraph or arena file, got {kind!r}")


def _represent_language(args, graph):
    if args.regex is not None:
        dfa = compile_regex(args.regex, graph.alphabet)
    elif args.second is not None:
        dfa = F.parse_dfa(_read(args.second))
    else:
        raise F.FormatError("represent LGRAPH needs a dfa file or --regex")
    expected = edges_by_language(graph, dfa).pairs
    norm = normalize_dfa(dfa)
    big = represent_by_regexp(graph, norm)
    q0 = norm.initial
    rep = GraphRepresentation(big, frozenset((v, q0) for v in graph.vertices))
    induced = {(a[0], b[0]) for a, b in induced_edges(rep)}
    same = induced == set(expected)
    _emit(args, "representation.txt", F.emit_graph_representation(rep))
    report = {
        "command": "represent",
        "mode": "language",
        "graph_vertices": len(graph.vertices),
        "representing_vertices": len(big.vertices),
        "representing_edges": len(big.edges),
        "max_out_degree": big.max_out_degree(),
        "language_edges": len(expected),
        "certificate": f"equivalent on {len(graph.vertices)} vertices" if same else "differs",
    }
    if not same:
        report["difference"] = sorted(f"{F.fmt_id(u)} {F.fmt_id(w)}" for u, w in induced ^ set(expected))[:10]
    return report, OK if same else NEGATIVE


def _represent_game(args, game, graph_rep):
    rep = build_game_representation(game, graph_rep)
    big_regions, b_I, b_II = solve(rep.arena)
    regions, _, _ = solve(game)
    pulled, p_I, p_II = pull_back_strategy(rep, big_regions, b_I, b_II)
    same = pulled == regions
    checks = {s.player: "ok" if verify_strategy(game, s, pulled.of(s.player)) else "failed" for s in (p_I, p_II)}
    _emit(args, "game_representation.txt", F.emit_game_representation(rep))
    report = {
        "command": "represent",
        "mode": "game",
        "representing_vertices": len(rep.arena.vertices),
        "region_I": _names(pulled.region_I),
        "region_II": _names(pulled.region_II),
        "regions_match": "yes" if same else "no",
        "pulled_back_strategies": checks,
    }
    ok = same and all(c == "ok" for c in checks.values())
    return report, OK if ok else NEGATIVE


def _start_of(args, default):
    if args.start:
        words = args.start.split()
        return words[0], tuple(words[1:])
    if default is None:
        raise F.FormatError("no start configuration: add a start line or pass --start")
    return default


def _opponents(args, winner):
    return {
        "random": RandomOpponent(args.seed),
        "greedy": GreedyOpponent(opponent(winner)),
    }


def _sim_summary(res):
    out = {"steps": res.steps}
    if res.failure:
        out["failure"] = res.failure
    elif res.lasso:
        out["lasso"] = f"{res.lasso[0]}..{res.lasso[1]}"
        out["cycle_min_color"] = res.cycle_min
        out["favorable"] = "yes" if res.favorable else "no"
    else:
        out["lasso"] = "none"
        out["suffix_min_color"] = res.suffix_min
    return out


def _sim_ok(res):
    return res.failure is None and res.favorable is not False


def cmd_pushdown(args):
    automaton, default = F.parse_pds(_read(args.pds))
    state, stack = _start_of(args, default)
    sol = solve_pushdown_game(automaton, state, stack, node_budget=args.budget)
    _emit(args, "strategy.txt", F.emit_store_strategy(sol.strategy, sol.start))
    sims = {}
    for name, opp in _opponents(args, sol.winner).items():
        res = simulate_store_strategy(automaton, sol.strategy, opp, (state, stack), sol.start, steps=args.steps)
        sims[name] = _sim_summary(res)
        sims[name]["ok"] = "yes" if _sim_ok(res) else "no"
    report = {
        "command": "pushdown",
        "start": " ".join([F.fmt_id(state), *stack]),
        "winner": sol.winner,
        "verdict": f"{sol.winner} wins",
        "claim_game_vertices": sol.game_size,
        "strategy_rows": len(sol.strategy.choose) + len(sol.strategy.update),
        "simulations": sims,
    }
    try:
        exp = expand_configuration_game(automaton, [(state, stack)], node_budget=min(args.budget, 20000))
    except StoreError:
        exp = None
    if exp is not None and exp.closed:
        regions, _, _ = solve(exp.arena)
        report["expansion"] = "agrees" if regions.winner_at((state, stack)) == sol.winner else "disagrees"
    else:
        report["expansion"] = "not finite within budget"
    failed = any(s["ok"] == "no" for s in sims.values()) or report["expansion"] == "disagrees"
    if failed:
        return report, NEGATIVE
    return report, OK if sol.winner == I else NEGATIVE


def cmd_simulate(args):
    automaton, default = F.parse_pds(_read(args.pds))
    strategy, strat_start = F.parse_store_strategy(_read(args.strategy))
    start = _start_of(args, default)
    if strat_start is None:
        raise F.FormatError("strategy file has no start line")
    opp = RandomOpponent(args.seed) if args.opponent == "random" else GreedyOpponent(opponent(strategy.player))
    res = simulate_store_strategy(automaton, strategy, opp, start, strat_start, steps=args.steps)
    report = {"command": "simulate", "player": strategy.player, "opponent": args.opponent}
    report.update(_sim_summary(res))
    return report, OK if _sim_ok(res) else NEGATIVE


def cmd_church(args):
    text = _read(args.spec)
    kind = F.sniff(text)
    rng = random.Random(args.seed)
    if kind == "acceptor":
        acc = F.parse_acceptor(text)
        res = decide_realizability(acc)
        report = {"command": "church", "kind": "acceptor", "game_vertices": len(res.arena.vertices)}
        report["verdict"] = res.verdict
        if not res.realizable:
            return report, NEGATIVE
        trans = extract_transducer(acc, res.output_strategy, res.regions)
        check = lambda pair: check_pair(acc, pair)
        letters = list(acc.inputs)
    elif kind == "elgame":
        game = F.parse_elgame(text)
        res = synthesize_from_elgame(game)
        report = {"command": "church", "kind": "elgame", "game_vertices": len(res.arena.vertices)}
        report["verdict"] = res.verdict
        if not res.realizable:
            return report, NEGATIVE
        trans = res.transducer
        check = lambda pair: check_pair_elgame(game, pair)
        letters = range(args.label_bound) if game.dom_in.is_nat else list(game.dom_in.letters)
    else:
        raise F.FormatError(f"church expects an acceptor or elgame file, got {kind!r}")
    _emit(args, "transducer.txt", F.emit_transducer(trans))
    failures = 0
    for _ in range(args.samples):
        x = random_lasso(rng, letters)
        if not check(LassoWordPair(x, transducer_run(trans, x))):
            failures += 1
    report["transducer_nodes"] = len(trans.nodes)
    report["lasso_checks"] = {"samples": args.samples, "failures": failures}
    return report, OK if failures == 0 else NEGATIVE


def cmd_verify(args):
    arena = F.parse_arena(_read(args.arena))
    strategy = F.parse_strategy(_read(args.strategy))
    if args.region is not None:
        region = frozenset(x for x in args.region.split(",") if x)
    else:
        regions, _, _ = solve(arena)
        region = regions.of(strategy.player)
    v = verify_strategy(arena, strategy, region)
    report = {"command": "verify", "player": strategy.player, "region": sorted(region), "verdict": "ok" if v else "failed"}
    if not v:
        report["reason"] = v.reason
        if v.witness is not None:
            report["witness"] = [F.fmt_id(x) for x in v.witness]
    return report, OK if v else NEGATIVE


def cmd_play(args):
    """Human against the solver's strategy, one move per input line.

    Prompts go to stderr so the closing report stays machine-readable.
    """
    say = lambda msg: print(msg, file=sys.stderr)
    arena = F.parse_arena(_read(args.arena))
    regions, s_I, s_II = solve(arena)
    human = args.side
    machine = s_II if human == I else s_I
    v = args.start if args.start is not None else sorted(arena.vertices, key=F.fmt_id)[0]
    if v not in arena.owner:
        raise F.FormatError(f"unknown start vertex {v!r}")
    say(f"you play {human}; the winner from {v} is {regions.winner_at(v)}. Type a successor, or 'quit'.")
    history = [v]
    for _ in range(args.steps):
        if arena.owner[v] == human:
            options = sorted(arena.succ[v], key=F.fmt_id)
            say(f"at {v} (color {arena.color[v]}), moves: {' '.join(options)}")
            line = sys.stdin.readline()
            if not line or line.strip() == "quit":
                break
            w = line.strip()
            if w not in options:
                say(f"{w!r} is not a successor of {v}")
                continue
        else:
            w = machine.moves[v]
            say(f"at {v} (color {arena.color[v]}), strategy moves to {w}")
        v = w
        history.append(v)
    report = {"command": "play", "you": human, "moves": len(history) - 1, "play": history}
    if history.count(history[-1]) > 1:
        # repeating the most recent cycle forever decides the play
        i = max(k for k in range(len(history) - 1) if history[k] == history[-1])
        low = min(arena.color[x] for x in history[i:-1])
        report["last_cycle"] = {"vertices": history[i:-1], "min_color": low, "won_by": I if low % 2 == 0 else opponent(I)}
    return report, OK


GENERATORS = {
    "arena": lambda seed, size: F.emit_arena(random_arena(seed, size)),
    "lgraph": lambda seed, size: F.emit_lgraph(random_labelled_graph(seed, size)),
    "dfa": lambda seed, size: F.emit_dfa(random_dfa(seed, size)),
    "pds": lambda seed, size: F.emit_pds(unbounded_pds(seed, states=size), ("q0", ())),
    "bounded-pds": lambda seed, size: F.emit_pds(bounded_pds(seed, states=size), ("q0", ())),
}


def cmd_generate(args):
    text = GENERATORS[args.kind](args.seed, args.size)
    if args.output:
        Path(args.output).write_text(text)
    if args.format == "text" and not args.output:
        sys.stdout.write(text)
        raise SystemExit(OK)
    return {"command": "generate", "kind": args.kind, "seed": args.seed, "size": args.size, "text": text}, OK


# -- plumbing ----------------------------------------------------------------


def render(report, fmt: str) -> str:
    if fmt == "structured":
        return json.dumps(report, sort_keys=True, indent=2) + "\n"
    lines = []

    def walk(prefix, value):
        if isinstance(value, dict):
            for k in sorted(value):
                walk(f"{prefix}.{k}" if prefix else k, value[k])
        elif isinstance(value, list):
            lines.append(f"{prefix}: {', '.join(str(x) for x in value)}".rstrip())
        else:
            lines.append(f"{prefix}: {value}")

    walk("", report)
    return "\n".join(lines) + "\n"


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "structured"), default="text")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--budget", type=int, default=200000, help="node budget for game constructions")
    common.add_argument("--steps", type=int, default=10000, help="simulation length")
    common.add_argument("--emit-dir", help="directory for strategy, transducer and graph files")
    common.add_argument("--timing", action="store_true", help="add wall-clock time to the report")

    p = argparse.ArgumentParser(prog="churchsynth", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("solve", parents=[common], help="solve a parity arena")
    s.add_argument("arena")
    s.set_defaults(func=cmd_solve)

    s = sub.add_parser("represent", parents=[common], help="representing graph of a labelled graph, or of a game")
    s.add_argument("first", help="lgraph file, or arena file")
    s.add_argument("second", nargs="?", help="dfa file, or graph representation of the arena")
    s.add_argument("--regex", help="regular expression instead of a dfa file")
    s.set_defaults(func=cmd_represent)

    s = sub.add_parser("pushdown", parents=[common], help="solve a pushdown game")
    s.add_argument("pds")
    s.add_argument("--start", help='start configuration "state letter..." (bottom first)')
    s.set_defaults(func=cmd_pushdown)

    s = sub.add_parser("church", parents=[common], help="synthesize from an acceptor or edge-labelled game")
    s.add_argument("spec")
    s.add_argument("--samples", type=int, default=500, help="random lasso inputs to check")
    s.add_argument("--label-bound", type=int, default=50, help="input labels drawn below this bound over N")
    s.set_defaults(func=cmd_church)

    s = sub.add_parser("simulate", parents=[common], help="play a store strategy against an opponent")
    s.add_argument("pds")
    s.add_argument("strategy")
    s.add_argument("--start")
    s.add_argument("--opponent", choices=("random", "greedy"), default="random")
    s.set_defaults(func=cmd_simulate)

    s = sub.add_parser("generate", parents=[common], help="seeded random instance")
    s.add_argument("kind", choices=sorted(GENERATORS))
    s.add_argument("--size", type=int, default=4)
    s.add_argument("--output", "-o")
    s.set_defaults(func=cmd_generate)

    s = sub.add_parser("verify", parents=[common], help="check a positional strategy on an arena")
    s.add_argument("arena")
    s.add_argument("strategy")
    s.add_argument("--region", help="comma-separated claimed region (default: the solver's)")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("play", parents=[common], help="play an arena against the solver's strategy")
    s.add_argument("arena")
    s.add_argument("--start")
    s.add_argument("--side", choices=("I", "II"), default="I", help="the player you control")
    s.set_defaults(func=cmd_play, steps=50)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    t0 = time.perf_counter()
    try:
        report, code = args.func(args)
    except SystemExit as e:
        return e.code
    except (ValueError, KeyError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return INVALID
    if args.timing:
        report["seconds"] = round(time.perf_counter() - t0, 3)
    sys.stdout.write(render(report, args.format))
    return code


if __name__ == "__main__":
    sys.exit(main())
