"""Independent checks for parity-game answers.

Nothing here calls the solver: :func:`verify_strategy` certifies a strategy
by closure and cycle inspection, :func:`play_positional` runs one play to its
lasso, and :func:`brute_force_regions` enumerates every pair of positional
strategies.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .arena import (
    I,
    II,
    ArenaError,
    ParityArena,
    PositionalStrategy,
    WinningRegions,
    opponent,
    parity_winner,
)

BRUTE_FORCE_LIMIT = 8


@dataclass(frozen=True)
class Verdict:
    ok: bool
    reason: str = ""
    witness: Optional[tuple] = None

    def __bool__(self):
        return self.ok


@dataclass(frozen=True)
class Lasso:
    stem: tuple
    cycle: tuple
    min_cycle_color: int
    winner: str


def _allowed(arena: ParityArena, strategy: PositionalStrategy, v):
    if arena.owner[v] == strategy.player:
        return (strategy.moves[v],)
    return arena.succ[v]


def _sccs(nodes, succ):
    """Tarjan's algorithm, iterative. ``succ`` maps node -> iterable."""
    index = {}
    low = {}
    on_stack = set()
    stack = []
    out = []
    counter = 0
    for root in nodes:
        if root in index:
            continue
        work = [(root, iter(succ[root]))]
        index[root] = low[root] = counter
        counter += 1
        stack.append(root)
        on_stack.add(root)
        while work:
            v, it = work[-1]
            advanced = False
            for w in it:
                if w not in index:
                    index[w] = low[w] = counter
                    counter += 1
                    stack.append(w)
                    on_stack.add(w)
                    work.append((w, iter(succ[w])))
                    advanced = True
                    break
                if w in on_stack:
                    low[v] = min(low[v], index[w])
            if advanced:
                continue
            work.pop()
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[v])
            if low[v] == index[v]:
                comp = []
                while True:
                    w = stack.pop()
                    on_stack.discard(w)
                    comp.append(w)
                    if w == v:
                        break
                out.append(comp)
    return out


def _cycle_through(v, succ):
    """Shortest cycle from ``v`` back to ``v`` in ``succ`` (assumed to exist)."""
    parent = {}
    frontier = [v]
    while frontier:
        nxt = []
        for u in frontier:
            for w in succ[u]:
                if w == v:
                    path = [u]
                    while path[-1] != v:
                        path.append(parent[path[-1]])
                    return tuple(reversed(path))
                if w not in parent and w != v:
                    parent[w] = u
                    nxt.append(w)
        frontier = nxt
    raise AssertionError("no cycle")


def verify_strategy(arena: ParityArena, strategy: PositionalStrategy, claimed_region) -> Verdict:
    """Certify that ``strategy`` wins from every vertex of ``claimed_region``.

    With the player's moves fixed and the opponent keeping all edges, the
    region must be closed and every cycle in it must have a least color of
    the player's parity. A rejection carries the offending edge or cycle.
    """
    region = frozenset(claimed_region)
    player = strategy.player
    for v in region:
        if v not in arena:
            return Verdict(False, "unknown vertex", (v,))
    for v in arena.vertices:
        if v in region and arena.owner[v] == player:
            if v not in strategy.moves:
                return Verdict(False, "strategy undefined", (v,))
            if strategy.moves[v] not in arena.succ[v]:
                return Verdict(False, "illegal move", (v, strategy.moves[v]))
    succ = {}
    for v in arena.vertices:
        if v not in region:
            continue
        targets = _allowed(arena, strategy, v)
        for w in targets:
            if w not in region:
                return Verdict(False, "escape", (v, w))
        succ[v] = targets
    order = [v for v in arena.vertices if v in region]
    bad_parity = 1 if player == I else 0
    for c in sorted({arena.color[v] for v in order}):
        if c % 2 != bad_parity:
            continue
        keep = [v for v in order if arena.color[v] >= c]
        keep_set = set(keep)
        sub = {v: tuple(w for w in succ[v] if w in keep_set) for v in keep}
        for comp in _sccs(keep, sub):
            comp_set = set(comp)
            nontrivial = len(comp) > 1 or comp[0] in sub[comp[0]]
            if not nontrivial:
                continue
            hits = [v for v in keep if v in comp_set and arena.color[v] == c]
            if hits:
                inner = {v: tuple(w for w in sub[v] if w in comp_set) for v in comp}
                return Verdict(False, "bad cycle", _cycle_through(hits[0], inner))
    return Verdict(True)


def play_positional(arena: ParityArena, s_I: PositionalStrategy, s_II: PositionalStrategy, start) -> Lasso:
    """The unique play from ``start`` under two positional strategies."""
    strategies = {I: s_I, II: s_II}
    seen = {}
    path = []
    v = start
    while v not in seen:
        seen[v] = len(path)
        path.append(v)
        s = strategies[arena.owner[v]]
        if v not in s.moves:
            raise ArenaError(f"strategy of {s.player} undefined at {v}")
        w = s.moves[v]
        if w not in arena.succ[v]:
            raise ArenaError(f"strategy move {v} -> {w} is not an edge")
        v = w
    k = seen[v]
    cycle = tuple(path[k:])
    low = min(arena.color[u] for u in cycle)
    return Lasso(tuple(path[:k]), cycle, low, parity_winner(low))


def _strategy_space(arena: ParityArena, player: str):
    own = arena.owned_by(player)
    return own, list(itertools.product(*(arena.succ[v] for v in own)))


def brute_force_regions(arena: ParityArena) -> WinningRegions:
    """Winning regions by exhaustive enumeration of positional strategy pairs.

    For each pair the play from every vertex is a lasso; player I wins at a
    vertex iff one of its strategies wins there against all opponent
    strategies. Positional determinacy makes this exact.
    """
    n = len(arena)
    if n > BRUTE_FORCE_LIMIT:
        raise ValueError(f"brute force limited to {BRUTE_FORCE_LIMIT} vertices, got {n}")
    index = {v: i for i, v in enumerate(arena.vertices)}
    colors = np.array([arena.color[v] for v in arena.vertices])
    own_I, space_I = _strategy_space(arena, I)
    own_II, space_II = _strategy_space(arena, II)
    idx_I = [index[v] for v in own_I]
    idx_II = [index[v] for v in own_II]
    # one row per opponent strategy
    base = np.zeros((len(space_II), n), dtype=np.int64)
    for r, choice in enumerate(space_II):
        for i, w in zip(idx_II, choice):
            base[r, i] = index[w]
    rows = np.arange(len(space_II))[:, None]
    region_I = np.zeros(n, dtype=bool)
    for choice in space_I:
        nxt = base.copy()
        for i, w in zip(idx_I, choice):
            nxt[:, i] = index[w]
        pos = np.tile(np.arange(n), (len(space_II), 1))
        for _ in range(n):
            pos = nxt[rows, pos]
        low = colors[pos]
        cur = pos
        for _ in range(n):
            cur = nxt[rows, cur]
            low = np.minimum(low, colors[cur])
        region_I |= np.all(low % 2 == 0, axis=0)
    verts = arena.vertices
    return WinningRegions(
        region_I=frozenset(verts[i] for i in range(n) if region_I[i]),
        region_II=frozenset(verts[i] for i in range(n) if not region_I[i]),
    )


def strategy_wins_everywhere(arena: ParityArena, strategy: PositionalStrategy, region) -> Optional[tuple]:
    """Exhaustive uniformity check: play ``strategy`` against every positional
    opponent from every vertex of ``region``. Returns a losing (start, opponent
    moves) pair or ``None``."""
    other = opponent(strategy.player)
    own, space = _strategy_space(arena, other)
    for choice in space:
        opp = PositionalStrategy(other, dict(zip(own, choice)))
        pair = (strategy, opp) if strategy.player == I else (opp, strategy)
        for v in (u for u in arena.vertices if u in region):
            if play_positional(arena, *pair, v).winner != strategy.player:
                return v, opp.moves
    return None
