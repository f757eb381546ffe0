"""Automata over abstract stores and their configuration games."""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Hashable, Mapping, Optional

from ..parity.arena import PLAYERS, ParityArena, validate_arena, vertex_key
from .stores import AbstractStore, PushdownStore, StoreError


class DeadConfiguration(StoreError):
    def __init__(self, config):
        super().__init__(f"no enabled transition at configuration {config!r}")
        self.config = config


@dataclass(frozen=True)
class Rule:
    """``source --[guard] op--> target``; ``guard`` is a store observation."""

    source: Hashable
    guard: Hashable
    op: tuple
    target: Hashable

    def sort_key(self):
        return vertex_key((self.source, self.guard, self.op, self.target))


@dataclass(frozen=True)
class StoreAutomaton:
    store: AbstractStore
    states: tuple
    owner: Mapping
    color: Mapping
    rules: tuple  # sorted by Rule.sort_key

    @classmethod
    def build(cls, store, owner: Mapping, color: Mapping, rules) -> "StoreAutomaton":
        states = tuple(sorted(owner, key=vertex_key))
        for q in states:
            if owner[q] not in PLAYERS:
                raise StoreError(f"bad owner for state {q}: {owner[q]!r}")
            if q not in color or not isinstance(color[q], int) or color[q] < 0:
                raise StoreError(f"missing or bad color for state {q}")
        rules = tuple(sorted(set(rules), key=Rule.sort_key))
        known = set(states)
        for r in rules:
            if r.source not in known or r.target not in known:
                raise StoreError(f"rule {r} mentions an undeclared state")
            if not store.is_observation(r.guard):
                raise StoreError(f"rule {r} has an invalid guard")
            if not store.is_operation(r.op):
                raise StoreError(f"rule {r} has an invalid operation")
        return cls(store, states, dict(owner), dict(color), rules)

    @cached_property
    def by_source(self) -> dict:
        out = {q: [] for q in self.states}
        for r in self.rules:
            out[r.source].append(r)
        return out

    def enabled(self, q, value) -> list:
        """``[(rule, new value)]`` for rules of ``q`` whose guard matches and whose op is defined."""
        obs = self.store.observe(value)
        out = []
        for r in self.by_source[q]:
            if r.guard == obs:
                nxt = self.store.apply(r.op, value)
                if nxt is not None:
                    out.append((r, nxt))
        return out

    def is_enabled(self, rule: Rule, q, value) -> bool:
        return (
            rule.source == q
            and rule in self.by_source[q]
            and rule.guard == self.store.observe(value)
            and self.store.apply(rule.op, value) is not None
        )


def pushdown_automaton(gamma, owner, color, rules) -> StoreAutomaton:
    return StoreAutomaton.build(PushdownStore(gamma), owner, color, rules)


@dataclass
class Expansion:
    """Result of a bounded exploration of the configuration game."""

    configs: list
    edges: set
    frontier: list
    arena: Optional[ParityArena] = None
    moves: dict = field(default_factory=dict)  # (config, successor) -> rule

    @property
    def closed(self) -> bool:
        return self.arena is not None


def expand_configuration_game(automaton: StoreAutomaton, initial, node_budget: int = 10000) -> Expansion:
    """Breadth-first expansion of configurations ``(q, value)`` reachable from ``initial``.

    When every reachable configuration fits in ``node_budget`` the result
    carries a :class:`ParityArena` over configurations; otherwise ``frontier``
    lists the discovered but unexpanded ones.
    """
    if node_budget < 1:
        raise StoreError("node budget must be at least 1")
    seen = {}
    queue = deque()
    for c in initial:
        if c not in seen:
            seen[c] = len(seen)
            queue.append(c)
    edges = set()
    moves = {}
    expanded = []
    while queue:
        if len(expanded) >= node_budget:
            break
        config = queue.popleft()
        q, value = config
        options = automaton.enabled(q, value)
        if not options:
            raise DeadConfiguration(config)
        expanded.append(config)
        for rule, nxt in options:
            target = (rule.target, nxt)
            edges.add((config, target))
            moves.setdefault((config, target), rule)
            if target not in seen:
                seen[target] = len(seen)
                queue.append(target)
    frontier = list(queue)
    exp = Expansion(expanded, edges, frontier, None, moves)
    if not frontier:
        owner = {c: automaton.owner[c[0]] for c in expanded}
        color = {c: automaton.color[c[0]] for c in expanded}
        exp.arena = validate_arena(expanded, edges, owner, color)
    return exp
