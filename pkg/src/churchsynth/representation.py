"""Graphs and games represented inside larger graphs and games.

A graph ``G = (V, E)`` is represented by ``H`` when ``V`` is a subset of the
vertices of ``H`` and ``E(u, v)`` holds exactly when ``H`` has a path from
``u`` to ``v`` whose only vertices in ``V`` are its endpoints. Vertices of
``H`` outside ``V`` are called proper.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Mapping, Optional

from .labelled import Digraph
from .parity.arena import (
    I,
    II,
    ArenaError,
    ParityArena,
    PositionalStrategy,
    WinningRegions,
    sorted_vertices,
    validate_arena,
)


class RepresentationError(ValueError):
    pass


# -- copying -----------------------------------------------------------------


@dataclass(frozen=True)
class CopiedGraph:
    base: Digraph
    copies: int
    graph: Digraph

    def in_copy(self, vertex, k: int) -> bool:
        return vertex[1] == k

    def same_base(self, a, b) -> bool:
        return a[0] == b[0]


def copy_graph(graph: Digraph, d: int) -> CopiedGraph:
    """``d`` disjoint tagged copies; edges never cross copies."""
    if d < 1:
        raise RepresentationError("copy count must be at least 1")
    verts = [(m, j) for j in range(d) for m in graph.vertices]
    edges = {((u, j), (w, j)) for j in range(d) for u, w in graph.edges}
    return CopiedGraph(graph, d, Digraph.build(verts, edges))


def project(copied: CopiedGraph, i: int) -> Digraph:
    """The image of the base graph under ``m -> (m, i)``."""
    if not 0 <= i < copied.copies:
        raise RepresentationError(f"no copy {i}")
    verts = [(m, i) for m in copied.base.vertices]
    edges = {(a, b) for a, b in copied.graph.edges if a[1] == i}
    return Digraph.build(verts, edges)


# -- graph representations ---------------------------------------------------


@dataclass(frozen=True)
class GraphRepresentation:
    big: Digraph
    gvertices: frozenset

    def __post_init__(self):
        missing = set(self.gvertices) - set(self.big.vertices)
        if missing:
            raise RepresentationError(f"G-vertices missing from the big graph: {sorted_vertices(missing)[:3]}")

    def is_proper(self, v) -> bool:
        return v not in self.gvertices


def _proper_walk(succ: Mapping, gvertices, source):
    """G-vertices reachable from ``source`` through proper interior vertices,
    plus the proper vertices visited on the way."""
    hits = set()
    visited = set()
    queue = deque([source])
    while queue:
        v = queue.popleft()
        for w in succ[v]:
            if w in gvertices:
                hits.add(w)
            elif w not in visited:
                visited.add(w)
                queue.append(w)
    return hits, visited


def induced_edges(rep: GraphRepresentation) -> frozenset:
    """Edges among G-vertices recovered from direct edges and proper paths."""
    succ = rep.big.succ
    out = set()
    for v in rep.big.vertices:
        if v in rep.gvertices:
            hits, _ = _proper_walk(succ, rep.gvertices, v)
            out.update((v, w) for w in hits)
    return frozenset(out)


def represents(rep: GraphRepresentation, graph: Digraph) -> bool:
    return set(graph.vertices) == set(rep.gvertices) and induced_edges(rep) == graph.edges


# -- game representations ----------------------------------------------------


@dataclass(frozen=True)
class GameRepresentation:
    """A parity game ``arena`` representing ``game`` through the embedding ``embed``."""

    game: ParityArena
    arena: ParityArena
    embed: Mapping  # G-vertex -> vertex of ``arena``

    @property
    def gvertices(self) -> frozenset:
        return frozenset(self.embed.values())

    def graph_representation(self) -> GraphRepresentation:
        big = Digraph.build(self.arena.vertices, self.arena.edges)
        return GraphRepresentation(big, self.gvertices)


def proper_reach(arena: ParityArena, gvertices) -> dict:
    """Proper vertex -> set of owners of G-vertices reaching it through proper vertices."""
    reach: dict = {}
    for v in arena.vertices:
        if v in gvertices:
            _, visited = _proper_walk(arena.succ, gvertices, v)
            for p in visited:
                reach.setdefault(p, set()).add(arena.owner[v])
    return reach


def validate_game_representation(rep: GameRepresentation) -> None:
    """Check the representation conditions; raise :class:`RepresentationError`.

    Proper vertices must be reachable from G-vertices of one player only and
    belong to that player. G-vertex colors are the original colors plus 2.
    Proper vertices of player I carry an odd color, those of player II an even
    one, both above every G-vertex color, so stalling on one's own proper
    vertices loses without disturbing plays that keep returning to G.
    """
    game, arena, embed = rep.game, rep.arena, rep.embed
    inverse = {w: v for v, w in embed.items()}
    if len(inverse) != len(embed):
        raise RepresentationError("embedding is not injective")
    induced = induced_edges(rep.graph_representation())
    expected = {(embed[u], embed[w]) for u, w in game.edges}
    if induced != expected:
        diff = sorted_vertices(induced ^ expected)[:3]
        raise RepresentationError(f"induced edges differ from the game's edges, e.g. {diff}")
    top = 0
    for v, w in embed.items():
        if arena.owner[w] != game.owner[v]:
            raise RepresentationError(f"owner of G-vertex {v} changed")
        if arena.color[w] != game.color[v] + 2:
            raise RepresentationError(f"G-vertex {v} must have color {game.color[v] + 2}")
        top = max(top, arena.color[w])
    for p, owners in proper_reach(arena, rep.gvertices).items():
        if len(owners) > 1:
            raise RepresentationError(f"proper vertex {p} is reachable from both players")
        (who,) = owners
        if arena.owner[p] != who:
            raise RepresentationError(f"proper vertex {p} must belong to {who}")
    for p in arena.vertices:
        if p in inverse:
            continue
        c = arena.color[p]
        want = 1 if arena.owner[p] == I else 0
        if c % 2 != want or c <= top:
            raise RepresentationError(f"proper vertex {p} has color {c}")


def proper_palette(game: ParityArena) -> tuple:
    """(color for player I proper vertices, color for player II proper vertices)."""
    top = max(game.color.values()) + 2
    odd = top + 1 if top % 2 == 0 else top + 2
    even = top + 2 if top % 2 == 0 else top + 1
    return odd, even


def build_game_representation(
    game: ParityArena,
    graph_rep: GraphRepresentation,
    proper_colors: Optional[tuple] = None,
    check: bool = True,
) -> GameRepresentation:
    """Two-copy game representation of ``game`` from a representation of its graph.

    Vertices are ``(v, 0)`` for player I vertices of ``game``, ``(v, 1)`` for
    player II vertices, and ``(p, j)`` for every proper ``p`` and ``j`` in
    ``{0, 1}``; owner follows the copy index. ``(m1, j1) -> (m2, j2)`` is an
    edge when ``m1 -> m2`` is an edge of the big graph and either ``j1 == j2``
    or ``m2`` is a G-vertex. Dead-end proper vertices get a self-loop so the
    player who walked into them loses there.
    """
    if set(graph_rep.gvertices) != set(game.vertices):
        raise RepresentationError("G-vertices of the representation differ from the game's vertices")
    if check and induced_edges(graph_rep) != game.edges:
        raise RepresentationError("graph representation does not represent the game's arena")
    if proper_colors is None:
        proper_colors = proper_palette(game)
    big = graph_rep.big
    gv = graph_rep.gvertices
    copy_of = {I: 0, II: 1}
    embed = {v: (v, copy_of[game.owner[v]]) for v in game.vertices}
    vertices = list(embed.values())
    owner = {}
    color = {}
    for v, w in embed.items():
        owner[w] = game.owner[v]
        color[w] = game.color[v] + 2
    for p in big.vertices:
        if p in gv:
            continue
        for j, who in ((0, I), (1, II)):
            vertices.append((p, j))
            owner[(p, j)] = who
            color[(p, j)] = proper_colors[j]
    edges = set()
    succ = big.succ
    for m1 in big.vertices:
        sources = [embed[m1]] if m1 in gv else [(m1, 0), (m1, 1)]
        for src in sources:
            j1 = src[1]
            for m2 in succ[m1]:
                edges.add((src, embed[m2] if m2 in gv else (m2, j1)))
    has_out = {a for a, _ in edges}
    for v in vertices:
        if v not in has_out:
            if v[0] in gv:
                raise RepresentationError(f"G-vertex {v[0]} has no outgoing path")
            edges.add((v, v))
    arena = validate_arena(vertices, edges, owner, color)
    rep = GameRepresentation(game, arena, embed)
    if check:
        validate_game_representation(rep)
    return rep


def identity_game_representation(game: ParityArena, big: ParityArena) -> GameRepresentation:
    """Wrap an explicitly built representing game whose G-vertices keep their ids."""
    return GameRepresentation(game, big, {v: v for v in game.vertices})


def pull_back_strategy(
    rep: GameRepresentation,
    regions: WinningRegions,
    s_I: PositionalStrategy,
    s_II: PositionalStrategy,
):
    """Positional strategies and regions of the represented game.

    From each G-vertex inside its owner's region, follow the owner's strategy
    through proper vertices until the next G-vertex. Outside the region the
    first out-edge is used.
    """
    game, arena, embed = rep.game, rep.arena, rep.embed
    inverse = {w: v for v, w in embed.items()}
    strategies = {I: s_I, II: s_II}
    won = {I: set(), II: set()}
    for v, w in embed.items():
        won[regions.winner_at(w)].add(v)
    moves = {I: {}, II: {}}
    for v in game.vertices:
        who = game.owner[v]
        if v not in won[who]:
            moves[who][v] = game.succ[v][0]
            continue
        s = strategies[who]
        cur = s.moves[embed[v]]
        seen = set()
        while cur not in inverse:
            if cur in seen:
                raise RepresentationError(f"strategy of {who} loops on proper vertices from {v}")
            seen.add(cur)
            if arena.owner[cur] != who:
                raise RepresentationError(f"walk from {v} entered a proper vertex of the opponent")
            cur = s.moves[cur]
        target = inverse[cur]
        if target not in game.succ[v]:
            raise ArenaError(f"pulled-back move {v} -> {target} is not an edge")
        moves[who][v] = target
    pulled = WinningRegions(frozenset(won[I]), frozenset(won[II]))
    return pulled, PositionalStrategy(I, moves[I]), PositionalStrategy(II, moves[II])
