"""Strategy coding over a uniform local linear order.

A coloring of the vertices in which any two out-neighbours of a common vertex
get different classes orders every out-neighbourhood at once. With such an
order, a positional strategy is just a map vertex -> position of the chosen
successor.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from .arena import ArenaError, ParityArena, PositionalStrategy, sorted_vertices, vertex_key


@dataclass(frozen=True)
class LocalLinearOrder:
    color_classes: Mapping

    def rank(self, v) -> int:
        return self.color_classes[v]

    def order(self, vertices) -> list:
        """Sort ``vertices`` by class; ties only happen outside a common out-neighbourhood."""
        return sorted(vertices, key=lambda v: (self.color_classes[v], vertex_key(v)))

    def is_valid_for(self, succ: Mapping) -> bool:
        for targets in succ.values():
            classes = [self.color_classes[w] for w in targets]
            if len(set(classes)) != len(classes):
                return False
        return True


@dataclass(frozen=True)
class StrategyCode:
    player: str
    partition: Mapping


def max_degree(vertices, succ: Mapping) -> int:
    nbrs = {v: set() for v in vertices}
    for u in vertices:
        for w in succ[u]:
            nbrs[u].add(w)
            nbrs[w].add(u)
    return max((len(n) for n in nbrs.values()), default=0)


def local_linear_order(vertices, succ: Mapping, degree_bound: int) -> LocalLinearOrder:
    """Greedy coloring of the shared-in-neighbour graph.

    ``u`` and ``v`` conflict when they are distinct and some ``w`` has edges to
    both. With every vertex having at most ``degree_bound`` neighbours the
    conflict graph has degree at most ``degree_bound**2``, so greedy coloring
    stays below ``degree_bound**2 + 1`` classes.
    """
    verts = sorted_vertices(vertices)
    d = max_degree(verts, succ)
    if d > degree_bound:
        raise ArenaError(f"degree {d} exceeds bound {degree_bound}")
    conflict = {v: set() for v in verts}
    for w in verts:
        outs = list(succ[w])
        for a in outs:
            for b in outs:
                if a != b:
                    conflict[a].add(b)
    classes = {}
    for v in verts:
        used = {classes[u] for u in conflict[v] if u in classes}
        c = 0
        while c in used:
            c += 1
        classes[v] = c
    assert max(classes.values(), default=0) <= degree_bound ** 2
    return LocalLinearOrder(classes)


def arena_order(arena: ParityArena) -> LocalLinearOrder:
    return local_linear_order(arena.vertices, arena.succ, max_degree(arena.vertices, arena.succ))


def encode_strategy(arena: ParityArena, order: LocalLinearOrder, strategy: PositionalStrategy) -> StrategyCode:
    partition = {}
    for v, w in strategy.moves.items():
        outs = order.order(arena.succ[v])
        if w not in outs:
            raise ArenaError(f"strategy move {v} -> {w} is not an edge")
        partition[v] = outs.index(w)
    return StrategyCode(strategy.player, partition)


def decode_strategy(arena: ParityArena, order: LocalLinearOrder, code: StrategyCode) -> PositionalStrategy:
    moves = {}
    for v, i in code.partition.items():
        outs = order.order(arena.succ[v])
        if not 0 <= i < len(outs):
            raise ArenaError(f"code {i} out of range at {v} (out-degree {len(outs)})")
        moves[v] = outs[i]
    return PositionalStrategy(code.player, moves)
