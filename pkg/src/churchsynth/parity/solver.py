"""Zielonka's recursive algorithm with positional strategy extraction.

Vertices are renumbered in :func:`vertex_key` order, so "lowest index" means
"lowest vertex id". Every strategy choice that is not forced by the attractor
ranks picks the lowest eligible successor.
"""
from __future__ import annotations

from collections import deque

from .arena import I, II, ParityArena, PositionalStrategy, WinningRegions

_PLAYER = (I, II)


class _Indexed:
    __slots__ = ("verts", "succ", "pred", "owner", "color")

    def __init__(self, arena: ParityArena):
        self.verts = arena.vertices
        index = {v: i for i, v in enumerate(self.verts)}
        self.succ = [[index[w] for w in arena.succ[v]] for v in self.verts]
        self.pred = [[index[u] for u in arena.pred[v]] for v in self.verts]
        self.owner = [0 if arena.owner[v] == I else 1 for v in self.verts]
        self.color = [arena.color[v] for v in self.verts]


def attractor(g: _Indexed, sub: set, target: set, player: int):
    """Attractor of ``target`` for ``player`` inside the subgame ``sub``.

    Returns the attractor and, for the player's vertices added on the way,
    a successor that strictly decreases the attractor rank.
    """
    attr = set(target)
    moves = {}
    remaining = {}
    queue = deque(sorted(target))
    while queue:
        w = queue.popleft()
        for u in g.pred[w]:
            if u not in sub or u in attr:
                continue
            if g.owner[u] == player:
                attr.add(u)
                moves[u] = w
                queue.append(u)
            else:
                if u not in remaining:
                    remaining[u] = sum(1 for x in g.succ[u] if x in sub)
                remaining[u] -= 1
                if remaining[u] == 0:
                    attr.add(u)
                    queue.append(u)
    return attr, moves


def _zielonka(g: _Indexed, game: set):
    won = (set(), set())
    strategy = {}
    game = set(game)
    while game:
        p = min(g.color[v] for v in game)
        alpha = p % 2
        top = {v for v in game if g.color[v] == p}
        a_set, a_moves = attractor(g, game, top, alpha)
        sub_won, sub_strategy = _zielonka(g, game - a_set)
        if not sub_won[1 - alpha]:
            won[alpha].update(game)
            for v in sub_won[alpha]:
                if v in sub_strategy:
                    strategy[v] = sub_strategy[v]
            strategy.update(a_moves)
            for v in sorted(top):
                if g.owner[v] == alpha and v not in a_moves:
                    strategy[v] = next(w for w in g.succ[v] if w in game)
            return won, strategy
        b_set, b_moves = attractor(g, game, sub_won[1 - alpha], 1 - alpha)
        won[1 - alpha].update(b_set)
        for v in sub_won[1 - alpha]:
            if v in sub_strategy:
                strategy[v] = sub_strategy[v]
        strategy.update(b_moves)
        game -= b_set
    return won, strategy


def solve_indexed(g: _Indexed):
    won, strategy = _zielonka(g, set(range(len(g.verts))))
    return won, strategy


def solve(arena: ParityArena):
    """Winning regions and uniform positional winning strategies of both players.

    Each returned strategy is total on its player's vertices. Inside the
    player's region it wins from every vertex; outside it takes the first
    out-edge.
    """
    g = _Indexed(arena)
    won, strategy = solve_indexed(g)
    verts = g.verts
    regions = WinningRegions(
        region_I=frozenset(verts[i] for i in won[0]),
        region_II=frozenset(verts[i] for i in won[1]),
    )
    strategies = []
    for p in (0, 1):
        moves = {}
        for i, v in enumerate(verts):
            if g.owner[i] != p:
                continue
            j = strategy[i] if i in won[p] else g.succ[i][0]
            moves[v] = verts[j]
        strategies.append(PositionalStrategy(_PLAYER[p], moves))
    return regions, strategies[0], strategies[1]
