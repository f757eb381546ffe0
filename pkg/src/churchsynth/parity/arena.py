"""Finite two-player parity arenas.

Player ``I`` wins a play when the least color seen infinitely often is even,
player ``II`` otherwise. Vertex ids can be any hashable value; ids inside one
arena are ordered by :func:`vertex_key` so every traversal is deterministic.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Hashable, Iterable, Mapping

I = "I"
II = "II"
PLAYERS = (I, II)

Vertex = Hashable


class ArenaError(ValueError):
    """Raised when an arena description violates a structural invariant."""


def opponent(player: str) -> str:
    return II if player == I else I


def parity_winner(color: int) -> str:
    """Player winning a play whose least recurring color is ``color``."""
    return I if color % 2 == 0 else II


def vertex_key(v):
    """Total sort key over the id shapes used in this package.

    Integers sort before strings, strings before tuples; tuples compare
    componentwise with the same rule. Anything else falls back on ``repr``.
    """
    if isinstance(v, bool):
        return (0, int(v))
    if isinstance(v, int):
        return (0, v)
    if isinstance(v, str):
        return (1, v)
    if isinstance(v, tuple):
        return (2, tuple(vertex_key(x) for x in v))
    if isinstance(v, frozenset):
        return (3, tuple(sorted(vertex_key(x) for x in v)))
    if v is None:
        return (-1, 0)
    return (4, repr(v))


def sorted_vertices(vs: Iterable[Vertex]) -> list:
    return sorted(vs, key=vertex_key)


@dataclass(frozen=True)
class ParityArena:
    """A checked parity arena. Build instances through :func:`validate_arena`."""

    vertices: tuple
    owner: Mapping[Vertex, str]
    color: Mapping[Vertex, int]
    succ: Mapping[Vertex, tuple]
    pred: Mapping[Vertex, tuple] = field(repr=False, compare=False)

    @property
    def edges(self) -> frozenset:
        return frozenset((u, v) for u in self.vertices for v in self.succ[u])

    @property
    def num_colors(self) -> int:
        return max(self.color.values()) + 1

    def owned_by(self, player: str) -> list:
        return [v for v in self.vertices if self.owner[v] == player]

    def subarena_edges(self, keep: set) -> dict:
        return {v: tuple(w for w in self.succ[v] if w in keep) for v in self.vertices if v in keep}

    def __len__(self):
        return len(self.vertices)

    def __contains__(self, v):
        return v in self.owner


def validate_arena(
    vertices: Iterable[Vertex],
    edges: Iterable[tuple],
    owner: Mapping[Vertex, str],
    color: Mapping[Vertex, int],
) -> ParityArena:
    """Check a raw arena description and freeze it.

    Raises :class:`ArenaError` naming the first violated invariant: an edge
    endpoint that is not a declared vertex, a missing or malformed owner or
    color, or a vertex without outgoing edges.
    """
    verts = sorted_vertices(set(vertices))
    rank = {v: i for i, v in enumerate(verts)}
    declared = rank
    succ: dict = {v: set() for v in verts}
    pred: dict = {v: set() for v in verts}
    for u, w in edges:
        for x in (u, w):
            if x not in declared:
                raise ArenaError(f"unknown vertex {x}")
        succ[u].add(w)
        pred[w].add(u)
    for v in verts:
        if v not in owner:
            raise ArenaError(f"missing owner at {v}")
        if owner[v] not in PLAYERS:
            raise ArenaError(f"bad owner {owner[v]!r} at {v}")
        if v not in color:
            raise ArenaError(f"missing color at {v}")
        c = color[v]
        if not isinstance(c, int) or isinstance(c, bool) or c < 0:
            raise ArenaError(f"bad color {c!r} at {v}")
        if not succ[v]:
            raise ArenaError(f"out-degree 0 at {v}")
    return ParityArena(
        vertices=tuple(verts),
        owner={v: owner[v] for v in verts},
        color={v: int(color[v]) for v in verts},
        succ={v: tuple(sorted(succ[v], key=rank.__getitem__)) for v in verts},
        pred={v: tuple(sorted(pred[v], key=rank.__getitem__)) for v in verts},
    )


@dataclass(frozen=True)
class PositionalStrategy:
    """Memoryless strategy: a partial map from the player's vertices to successors."""

    player: str
    moves: Mapping[Vertex, Vertex]

    def __call__(self, v):
        return self.moves[v]

    def check_legal(self, arena: ParityArena) -> None:
        for v, w in self.moves.items():
            if arena.owner.get(v) != self.player:
                raise ArenaError(f"strategy of {self.player} moves at foreign vertex {v}")
            if w not in arena.succ[v]:
                raise ArenaError(f"strategy move {v} -> {w} is not an edge")


@dataclass(frozen=True)
class WinningRegions:
    region_I: frozenset
    region_II: frozenset

    def of(self, player: str) -> frozenset:
        return self.region_I if player == I else self.region_II

    def winner_at(self, v) -> str:
        return I if v in self.region_I else II
