"""Labelled graphs, DFAs, and edge relations defined by path labels.

A path ``v1 -e1-> v2 ... vn`` carries the labels obtained by picking one
letter per vertex and per edge in the interleaved order
``v1, e1, v2, ..., e(n-1), vn``. A language ``L`` relates ``u`` to ``v``
when some path from ``u`` to ``v`` has a label in ``L``. Paths have at least
one vertex, so the empty word never produces an edge.
"""
from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass
from typing import Hashable, Mapping

from .parity.arena import sorted_vertices, vertex_key


class LabelError(ValueError):
    pass


@dataclass(frozen=True)
class LabelledGraph:
    alphabet: tuple
    vertices: tuple
    vertex_labels: Mapping
    edge_labels: Mapping  # (u, v) -> frozenset of letters

    @classmethod
    def build(cls, alphabet, vertex_labels: Mapping, edge_labels: Mapping) -> "LabelledGraph":
        sigma = tuple(alphabet)
        letters = set(sigma)
        verts = sorted_vertices(vertex_labels)
        vl = {}
        for v in verts:
            labels = frozenset(vertex_labels[v])
            if not labels:
                raise LabelError(f"vertex {v} has no label")
            if not labels <= letters:
                raise LabelError(f"vertex {v} has labels outside the alphabet: {sorted(labels - letters)}")
            vl[v] = labels
        el = {}
        for (u, w), labels in sorted(edge_labels.items(), key=lambda kv: vertex_key(kv[0])):
            if u not in vl or w not in vl:
                raise LabelError(f"edge ({u}, {w}) has an undeclared endpoint")
            labels = frozenset(labels)
            if not labels:
                raise LabelError(f"edge ({u}, {w}) has no label")
            if not labels <= letters:
                raise LabelError(f"edge ({u}, {w}) has labels outside the alphabet")
            el[(u, w)] = labels
        return cls(sigma, tuple(verts), vl, el)

    @property
    def succ(self) -> dict:
        out = {v: [] for v in self.vertices}
        for u, w in self.edge_labels:
            out[u].append(w)
        return {v: tuple(sorted_vertices(ws)) for v, ws in out.items()}

    @property
    def edges(self) -> frozenset:
        return frozenset(self.edge_labels)

    def max_out_degree(self) -> int:
        return max((len(ws) for ws in self.succ.values()), default=0)


@dataclass(frozen=True)
class Dfa:
    """Complete deterministic automaton over a finite alphabet."""

    alphabet: tuple
    states: tuple
    initial: Hashable
    accepting: frozenset
    delta: Mapping  # (state, letter) -> state

    @classmethod
    def build(cls, alphabet, states, initial, accepting, delta: Mapping) -> "Dfa":
        sigma = tuple(alphabet)
        qs = tuple(sorted_vertices(set(states)))
        if initial not in qs:
            raise LabelError(f"initial state {initial} not declared")
        acc = frozenset(accepting)
        if not acc <= set(qs):
            raise LabelError("accepting state not declared")
        table = {}
        for q in qs:
            for a in sigma:
                if (q, a) not in delta:
                    raise LabelError(f"transition missing at ({q}, {a})")
                t = delta[(q, a)]
                if t not in qs:
                    raise LabelError(f"transition to undeclared state {t}")
                table[(q, a)] = t
        return cls(sigma, qs, initial, acc, table)

    def step(self, q, letter):
        return self.delta[(q, letter)]

    def run(self, word, start=None):
        q = self.initial if start is None else start
        for a in word:
            q = self.delta[(q, a)]
        return q

    def accepts(self, word) -> bool:
        return self.run(word) in self.accepting

    def initial_has_incoming(self) -> bool:
        return any(t == self.initial for t in self.delta.values())


def _fresh(states, base):
    if isinstance(base, str) and all(isinstance(q, str) for q in states):
        name = base + "'"
        while name in states:
            name += "'"
        return name
    k = 0
    while ("init", k) in states:
        k += 1
    return ("init", k)


def normalize_dfa(dfa: Dfa) -> Dfa:
    """Language-equivalent DFA whose initial state has no incoming transitions."""
    if not dfa.initial_has_incoming():
        return dfa
    fresh = _fresh(set(dfa.states), dfa.initial)
    delta = dict(dfa.delta)
    for a in dfa.alphabet:
        delta[(fresh, a)] = dfa.delta[(dfa.initial, a)]
    accepting = set(dfa.accepting)
    if dfa.initial in dfa.accepting:
        accepting.add(fresh)
    return Dfa.build(dfa.alphabet, dfa.states + (fresh,), fresh, accepting, delta)


def all_words(alphabet, max_len):
    for n in range(max_len + 1):
        yield from itertools.product(alphabet, repeat=n)


def path_labels(graph: LabelledGraph, path) -> set:
    """Every label word of ``path``; exponential, meant for small checks."""
    path = tuple(path)
    if not path:
        raise LabelError("a path has at least one vertex")
    pieces = [graph.vertex_labels[path[0]]]
    for u, w in zip(path, path[1:]):
        if (u, w) not in graph.edge_labels:
            raise LabelError(f"({u}, {w}) is not an edge")
        pieces.append(graph.edge_labels[(u, w)])
        pieces.append(graph.vertex_labels[w])
    return {tuple(word) for word in itertools.product(*(sorted(p) for p in pieces))}


@dataclass(frozen=True)
class PathLabelEdgeSet:
    graph: LabelledGraph
    dfa: Dfa
    pairs: frozenset


def reachable_states(graph: LabelledGraph, dfa: Dfa, source) -> dict:
    """Map vertex -> DFA states reached by labels of paths from ``source``."""
    start = {dfa.step(dfa.initial, a) for a in graph.vertex_labels[source]}
    seen = {(source, q) for q in start}
    queue = deque(sorted(seen, key=vertex_key))
    succ = graph.succ
    while queue:
        v, q = queue.popleft()
        for w in succ[v]:
            for e in graph.edge_labels[(v, w)]:
                q1 = dfa.step(q, e)
                for b in graph.vertex_labels[w]:
                    item = (w, dfa.step(q1, b))
                    if item not in seen:
                        seen.add(item)
                        queue.append(item)
    out: dict = {}
    for v, q in seen:
        out.setdefault(v, set()).add(q)
    return out


def edges_by_language(graph: LabelledGraph, dfa: Dfa) -> PathLabelEdgeSet:
    """Exact path-label edge relation via a (vertex, state) reachability fixpoint."""
    if not set(graph.alphabet) <= set(dfa.alphabet):
        raise LabelError("DFA alphabet does not cover the graph alphabet")
    pairs = set()
    for u in graph.vertices:
        for v, qs in reachable_states(graph, dfa, u).items():
            if qs & dfa.accepting:
                pairs.add((u, v))
    return PathLabelEdgeSet(graph, dfa, frozenset(pairs))


@dataclass(frozen=True)
class Digraph:
    vertices: tuple
    edges: frozenset

    @classmethod
    def build(cls, vertices, edges) -> "Digraph":
        return cls(tuple(sorted_vertices(set(vertices))), frozenset(edges))

    @property
    def succ(self) -> dict:
        out = {v: [] for v in self.vertices}
        for u, w in self.edges:
            out[u].append(w)
        return {v: tuple(sorted_vertices(ws)) for v, ws in out.items()}

    def max_out_degree(self) -> int:
        return max((len(ws) for ws in self.succ.values()), default=0)


def represent_by_regexp(graph: LabelledGraph, dfa: Dfa) -> Digraph:
    """Bounded out-degree graph on ``V x Q`` representing the path-label relation.

    Edge families:

    * ``(v, q0) -> (v, q)`` when a label of ``v`` leads from ``q0`` to ``q``;
    * ``(v1, q1) -> (v2, q2)`` for ``q1, q2 != q0`` when ``(v1, v2)`` is an edge
      and an edge label followed by a label of ``v2`` leads from ``q1`` to ``q2``;
    * ``(v, q) -> (v, q0)`` when ``q != q0`` is accepting.

    The G-vertices are ``V x {q0}``. ``dfa`` must be normalized.
    """
    if dfa.initial_has_incoming():
        raise LabelError("represent_by_regexp needs a normalized DFA")
    q0 = dfa.initial
    verts = [(v, q) for v in graph.vertices for q in dfa.states]
    edges = set()
    for v in graph.vertices:
        for a in graph.vertex_labels[v]:
            edges.add(((v, q0), (v, dfa.step(q0, a))))
        for q in dfa.accepting:
            if q != q0:
                edges.add(((v, q), (v, q0)))
    for (v1, v2), labels in graph.edge_labels.items():
        for q1 in dfa.states:
            if q1 == q0:
                continue
            for e in labels:
                q_mid = dfa.step(q1, e)
                for b in graph.vertex_labels[v2]:
                    edges.add(((v1, q1), (v2, dfa.step(q_mid, b))))
    return Digraph.build(verts, edges)


def language_included(small: Dfa, big: Dfa) -> bool:
    """``L(small) <= L(big)`` by product reachability."""
    start = (small.initial, big.initial)
    seen = {start}
    queue = deque([start])
    while queue:
        p, q = queue.popleft()
        if p in small.accepting and q not in big.accepting:
            return False
        for a in small.alphabet:
            nxt = (small.step(p, a), big.step(q, a))
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    return True
