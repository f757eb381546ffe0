"""Seeded random instances for the property suites and the CLI.

Every generator takes a :class:`random.Random` (or a seed) and draws in a
fixed order, so the same seed always gives the same instance.
"""
from __future__ import annotations

import itertools
import random

from .labelled import Dfa, Digraph, LabelledGraph
from .parity.arena import I, II, ParityArena, validate_arena
from .representation import GraphRepresentation
from .store.automaton import Rule, StoreAutomaton, pushdown_automaton
from .store.stores import POP, SKIP, push


def _rng(seed_or_rng) -> random.Random:
    if isinstance(seed_or_rng, random.Random):
        return seed_or_rng
    return random.Random(seed_or_rng)


def random_arena(seed_or_rng, n: int, max_out: int = 3, colors: int = 4) -> ParityArena:
    rng = _rng(seed_or_rng)
    verts = list(range(n))
    owner = {v: rng.choice((I, II)) for v in verts}
    color = {v: rng.randrange(colors) for v in verts}
    edges = set()
    for v in verts:
        k = rng.randint(1, min(max_out, n))
        for w in rng.sample(verts, k):
            edges.add((v, w))
    return validate_arena(verts, edges, owner, color)


def exhaustive_arenas(n: int, colors: int = 4):
    """Every arena on vertices ``0..n-1``, one per relabelling class.

    An arena is kept only when its (owner, color, successors) table is the
    least among all vertex permutations of itself.
    """
    verts = list(range(n))
    succ_sets = [s for k in range(1, n + 1) for s in itertools.combinations(verts, k)]
    perms = list(itertools.permutations(verts))[1:]
    for owners in itertools.product((0, 1), repeat=n):
        for cols in itertools.product(range(colors), repeat=n):
            labels = list(zip(owners, cols))
            for succs in itertools.product(succ_sets, repeat=n):
                table = tuple((labels[v], succs[v]) for v in verts)
                if any(_permuted(table, p) < table for p in perms):
                    continue
                yield validate_arena(
                    verts,
                    [(v, w) for v in verts for w in succs[v]],
                    {v: I if owners[v] == 0 else II for v in verts},
                    dict(enumerate(cols)),
                )


def _permuted(table, perm):
    inv = {p: i for i, p in enumerate(perm)}
    out = [None] * len(table)
    for v, (label, succ) in enumerate(table):
        out[perm[v]] = (label, tuple(sorted(perm[w] for w in succ)))
    return tuple(out)


def random_labelled_graph(seed_or_rng, n: int, alphabet=("a", "b", "c"), max_out: int = 2) -> LabelledGraph:
    rng = _rng(seed_or_rng)
    sigma = tuple(alphabet)
    vl = {v: set(rng.sample(sigma, rng.randint(1, 2))) for v in range(n)}
    el = {}
    for v in range(n):
        for w in rng.sample(range(n), rng.randint(0, min(max_out, n))):
            el[(v, w)] = set(rng.sample(sigma, rng.randint(1, 2)))
    return LabelledGraph.build(sigma, vl, el)


def random_dfa(seed_or_rng, states: int, alphabet=("a", "b", "c")) -> Dfa:
    rng = _rng(seed_or_rng)
    qs = list(range(states))
    delta = {(q, a): rng.choice(qs) for q in qs for a in alphabet}
    accepting = {q for q in qs if rng.random() < 0.4}
    return Dfa.build(alphabet, qs, 0, accepting, delta)


def random_represented_game(seed_or_rng, n: int, colors: int = 4):
    """A game on ``0..n-1`` together with a representation of its arena.

    Some edges are kept direct, the rest are routed through chains of proper
    vertices; chains are shared between edges leaving the same vertex, so
    proper vertices may branch.
    """
    rng = _rng(seed_or_rng)
    game = random_arena(rng, n, max_out=3, colors=colors)
    verts = list(game.vertices)
    edges = set()
    for v in verts:
        targets = list(game.succ[v])
        direct = [w for w in targets if rng.random() < 0.4]
        routed = [w for w in targets if w not in direct]
        edges.update((v, w) for w in direct)
        if routed:
            hub = ("p", v, 0)
            edges.add((v, hub))
            for w in routed:
                if rng.random() < 0.5:
                    mid = ("p", v, w)
                    edges.add((hub, mid))
                    edges.add((mid, w))
                else:
                    edges.add((hub, w))
    big_verts = set(verts) | {x for e in edges for x in e}
    rep = GraphRepresentation(Digraph.build(big_verts, edges), frozenset(verts))
    return game, rep


def _pds_rules(rng, states, tops, ops_for, rules_per=(1, 2)):
    rules = set()
    for q in states:
        for top in tops:
            ops = ops_for(top)
            for _ in range(rng.randint(*rules_per)):
                rules.add(Rule(q, top, rng.choice(ops), rng.choice(states)))
    return rules


def bounded_pds(seed_or_rng, height: int = 2, states: int = 3, colors: int = 3, letters=("a", "b")) -> StoreAutomaton:
    """Pushdown game whose stack never exceeds ``height``: letters carry their level."""
    rng = _rng(seed_or_rng)
    gamma = [f"{x}{lvl}" for lvl in range(1, height + 1) for x in letters]
    qs = [f"q{i}" for i in range(states)]
    owner = {q: rng.choice((I, II)) for q in qs}
    color = {q: rng.randrange(colors) for q in qs}

    def ops_for(top):
        lvl = 0 if top is None else int(top[len(letters[0]):])
        ops = [SKIP]
        if top is not None:
            ops.append(POP)
        if lvl < height:
            ops.extend(push(f"{x}{lvl + 1}") for x in letters)
        return ops

    return pushdown_automaton(gamma, owner, color, _pds_rules(rng, qs, [None] + gamma, ops_for))


def unbounded_pds(seed_or_rng, states: int = 3, colors: int = 3, letters=("a", "b")) -> StoreAutomaton:
    rng = _rng(seed_or_rng)
    qs = [f"q{i}" for i in range(states)]
    owner = {q: rng.choice((I, II)) for q in qs}
    color = {q: rng.randrange(colors) for q in qs}

    def ops_for(top):
        ops = [SKIP] + [push(x) for x in letters]
        if top is not None:
            ops += [POP, POP]
        return ops

    return pushdown_automaton(letters, owner, color, _pds_rules(rng, qs, [None, *letters], ops_for))


def random_lasso(seed_or_rng, letters, max_stem: int = 4, max_cycle: int = 4):
    """Lasso word over ``letters`` (any sequence, e.g. a ``range`` for naturals)."""
    from .synthesis import LassoWord

    rng = _rng(seed_or_rng)
    stem = tuple(rng.choice(letters) for _ in range(rng.randint(0, max_stem)))
    cycle = tuple(rng.choice(letters) for _ in range(rng.randint(1, max_cycle)))
    return LassoWord(stem, cycle)
