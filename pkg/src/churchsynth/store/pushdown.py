"""Pushdown parity games solved through a finite game of claims.

Each stack frame (the stretch of play between pushing a letter and popping
it) is summarised by a claim made by player I when the letter is pushed: for
every color ``c`` a set of states. The claim says that if the frame is ever
popped, with ``c`` the least color seen inside it, the pop lands in one of
the states listed for ``c``. Player II then either checks the claim by
playing the frame, or accepts one of its promises and resumes the outer frame
right away. A pop inside a checked frame ends the finite game, won by I iff
the claim holds.

Positions of the finite game:

* ``("main", q, top, claim, low)``: state ``q`` in a frame whose letter is
  ``top`` (None at the bottom), with ``low`` the least color seen in the frame;
* ``("claim", q, letter, ctx)``: player I picks a claim for a pushed letter;
* ``("adam", q, letter, claim, ctx)``: player II checks or accepts;
* ``("col", c, p, ctx)``: an accepted promise, carrying the frame's color ``c``;
* ``("sink", p, won)``: a pop to ``p`` inside a checked frame.

``ctx`` is the outer ``(top, claim, low)`` to resume.
"""
from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass
from typing import Optional

from ..parity.arena import I, II, ParityArena, WinningRegions, opponent, validate_arena
from ..parity.solver import solve
from .automaton import DeadConfiguration, Rule, StoreAutomaton
from .stores import POP, SKIP, FrameStack, PushdownStore, StoreError, push
from .strategy import StoreStrategy

INIT = "__init__"


def _low(m, c):
    return None if m is None else min(m, c)


def _subsets(items):
    items = list(items)
    for n in range(len(items) + 1):
        for combo in itertools.combinations(items, n):
            yield frozenset(combo)


class ClaimGame:
    """Lazily built finite game of claims for one start configuration."""

    def __init__(self, automaton: StoreAutomaton, start_state, stack=(), node_budget: int = 200000):
        if not isinstance(automaton.store, PushdownStore):
            raise StoreError("the claims reduction needs a pushdown store")
        for letter in stack:
            if letter not in automaton.store.gamma:
                raise StoreError(f"stack letter {letter!r} not in the stack alphabet")
        if start_state not in automaton.owner:
            raise StoreError(f"unknown state {start_state!r}")
        self.automaton = automaton
        self.stack = tuple(stack)
        self.start_state = start_state
        self.node_budget = node_budget
        colors = sorted(set(automaton.color.values()))
        self.colors = colors
        self.neutral = max(colors + [1]) + 1
        self._rules = {}
        for r in automaton.rules:
            self._rules.setdefault((r.source, r.guard), []).append(r)
        targets = {}
        for r in automaton.rules:
            if r.op == POP:
                targets.setdefault(r.guard, set()).add(r.target)
        self.pop_targets = {g: sorted(ts, key=str) for g, ts in targets.items()}
        self._claims = {}
        self.arena: Optional[ParityArena] = None
        first = (INIT, 0) if stack else start_state
        self.start = ("main", first, None, None, None)

    # -- structure ---------------------------------------------------------

    def rules_at(self, q, top) -> list:
        if isinstance(q, tuple) and q[:1] == (INIT,):
            i = q[1]
            nxt = (INIT, i + 1) if i + 1 < len(self.stack) else self.start_state
            return [Rule(q, top, push(self.stack[i]), nxt)]
        return self._rules.get((q, top), [])

    def state_color(self, q) -> int:
        return self.automaton.color[q] if q in self.automaton.color else self.neutral

    def state_owner(self, q) -> str:
        return self.automaton.owner.get(q, I)

    def claims(self, letter) -> list:
        if letter not in self._claims:
            targets = self.pop_targets.get(letter, [])
            if not targets:
                self._claims[letter] = [frozenset()]
            else:
                pairs = [(p, c) for p in targets for c in self.colors]
                self._claims[letter] = list(_subsets(pairs))
        return self._claims[letter]

    def successors(self, node) -> list:
        kind = node[0]
        if kind == "main":
            _, q, top, claim, low = node
            out = []
            for r in self.rules_at(q, top):
                if r.op == SKIP:
                    out.append(("main", r.target, top, claim, _low(low, self.state_color(r.target))))
                elif r.op == POP:
                    if top is None:
                        continue
                    out.append(("sink", r.target, (r.target, low) in claim))
                else:
                    out.append(("claim", r.target, r.op[1], (top, claim, low)))
            return out
        if kind == "claim":
            _, q, letter, ctx = node
            return [("adam", q, letter, claim, ctx) for claim in self.claims(letter)]
        if kind == "adam":
            _, q, letter, claim, ctx = node
            out = [("main", q, letter, claim, self.state_color(q))]
            for p, c in sorted(claim, key=str):
                out.append(("col", c, p, ctx))
            return out
        if kind == "col":
            _, c, p, (top, claim, low) = node
            return [("main", p, top, claim, _low(_low(low, c), self.state_color(p)))]
        if kind == "sink":
            return [node]
        raise AssertionError(node)

    def owner_of(self, node) -> str:
        kind = node[0]
        if kind == "main":
            return self.state_owner(node[1])
        return II if kind == "adam" else I

    def color_of(self, node) -> int:
        kind = node[0]
        if kind == "main":
            return self.state_color(node[1])
        if kind == "col":
            return node[1]
        if kind == "sink":
            return 0 if node[2] else 1
        return self.neutral

    def build(self) -> ParityArena:
        if self.arena is not None:
            return self.arena
        seen = {self.start}
        queue = deque([self.start])
        edges = []
        while queue:
            node = queue.popleft()
            nxt = self.successors(node)
            if not nxt:
                raise DeadConfiguration((node[1], node[2]))
            for w in nxt:
                edges.append((node, w))
                if w not in seen:
                    if len(seen) >= self.node_budget:
                        raise StoreError(f"claim game exceeds the node budget of {self.node_budget}")
                    seen.add(w)
                    queue.append(w)
        owner = {v: self.owner_of(v) for v in seen}
        color = {v: self.color_of(v) for v in seen}
        self.arena = validate_arena(seen, edges, owner, color)
        return self.arena


@dataclass(frozen=True)
class PushdownSolution:
    winner: str
    strategy: StoreStrategy
    start: tuple  # initial strategy configuration (state, frame stack)
    regions: WinningRegions
    game_size: int


def _rule_for(game: ClaimGame, node, succ) -> Rule:
    _, q, top, _, _ = node
    for r in game.rules_at(q, top):
        if r.op == SKIP and succ[0] == "main" and succ[1] == r.target:
            return r
        if r.op == POP and succ[0] == "sink" and succ[1] == r.target:
            return r
        if r.op[0] == "push" and succ[0] == "claim" and succ[1:3] == (r.target, r.op[1]):
            return r
    raise AssertionError(f"no rule from {node} to {succ}")


def dual_automaton(automaton: StoreAutomaton) -> StoreAutomaton:
    """Same rules with owners swapped and colors shifted by one, so II's
    winning plays become I's."""
    owner = {q: opponent(p) for q, p in automaton.owner.items()}
    color = {q: c + 1 for q, c in automaton.color.items()}
    return StoreAutomaton.build(automaton.store, owner, color, automaton.rules)


def _claimant_strategy(game: ClaimGame, regions: WinningRegions, s_I) -> tuple:
    """Tables and initial frames for player I of ``game`` from a positional
    strategy winning on the claim game.

    Player I picks claims with ``s_I`` and, in the real game, every claim is
    checked. A pop inside a frame lands on a promised state, which is the same
    as II accepting that promise, so the play keeps following ``s_I``.
    """
    automaton = game.automaton

    def step(node, rule):
        _, q, top, claim, low = node
        if rule.op == SKIP:
            return ("set", (top, claim, _low(low, game.state_color(rule.target))))
        if rule.op == POP:
            return ("popmin", game.state_color(rule.target))
        claim_node = ("claim", rule.target, rule.op[1], (top, claim, low))
        return ("push", (rule.op[1], s_I.moves[claim_node][3], game.state_color(rule.target)))

    choose = {}
    update = {}
    for v in game.arena.vertices:
        if v[0] != "main" or v not in regions.region_I or v[1] not in automaton.owner:
            continue
        _, q, top, claim, low = v
        record = (top, claim, low)
        if automaton.owner[q] == I:
            rule = _rule_for(game, v, s_I.moves[v])
            choose[(q, record)] = (step(v, rule), rule.target, rule)
        else:
            for rule in game.rules_at(q, top):
                if rule.op == POP and top is None:
                    continue
                update[(q, record, rule)] = (step(v, rule), rule.target)

    # The given stack is built by a forced prefix of pushes; replay it to get
    # the initial frame records.
    frames = [FrameStack.BOTTOM]
    record = FrameStack.BOTTOM
    for i, letter in enumerate(game.stack):
        target = (INIT, i + 1) if i + 1 < len(game.stack) else game.start_state
        claim = s_I.moves[("claim", target, letter, record)][3]
        record = (letter, claim, game.state_color(target))
        frames.append(record)
    return choose, update, tuple(frames)


def solve_pushdown_game(
    automaton: StoreAutomaton, state, stack=(), node_budget: int = 200000
) -> PushdownSolution:
    """Winner from configuration ``(state, stack)`` and a pushdown strategy for it.

    The strategy's auxiliary store is a :class:`FrameStack` holding one
    ``(letter, claim, low)`` record per stack letter, so its tables only look
    at the current state and the top record. When II wins, the strategy is
    read off the claim game of the dual automaton, where II makes the claims.
    """
    game = ClaimGame(automaton, state, stack, node_budget)
    regions, s_I, _ = solve(game.build())
    winner = regions.winner_at(game.start)
    size = len(game.arena.vertices)
    if winner == II:
        game = ClaimGame(dual_automaton(automaton), state, stack, node_budget)
        dual_regions, s_I, _ = solve(game.build())
        if dual_regions.winner_at(game.start) != I:
            raise AssertionError("dual claim game disagrees on the winner")
        choose, update, frames = _claimant_strategy(game, dual_regions, s_I)
    else:
        choose, update, frames = _claimant_strategy(game, regions, s_I)
    strategy = StoreStrategy(winner, automaton.states, FrameStack(), choose, update)
    return PushdownSolution(winner, strategy, (state, frames), regions, size)
