"""Strategy automata with an auxiliary store, and a simulator for them.

A :class:`StoreStrategy` for player ``p`` reads its own state and the
observation of its auxiliary store. At a configuration owned by ``p`` the
``choose`` table gives an auxiliary operation, a next state and the game rule
to play; after an opponent move the ``update`` table gives the auxiliary
operation and next state for the rule the opponent played.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Mapping, Optional

from ..parity.arena import ParityArena, PositionalStrategy, parity_winner, vertex_key
from .automaton import Expansion, Rule, StoreAutomaton
from .stores import AbstractStore, MirrorStore, StoreError


@dataclass(frozen=True)
class StoreStrategy:
    player: str
    states: tuple
    store: AbstractStore
    choose: Mapping  # (state, obs) -> (aux op, next state, rule)
    update: Mapping  # (state, obs, rule) -> (aux op, next state)

    def rows(self):
        """Table rows in a stable order, for emission."""
        ch = sorted(self.choose.items(), key=lambda kv: vertex_key(kv[0]))
        up = sorted(
            self.update.items(),
            key=lambda kv: vertex_key((kv[0][0], kv[0][1], _rule_tuple(kv[0][2]))),
        )
        return ch, up


def _rule_tuple(rule: Rule) -> tuple:
    return (rule.source, rule.guard, rule.op, rule.target)


# -- opponents ---------------------------------------------------------------


class Opponent:
    """Chooses among enabled rules for the player not owning the strategy.

    ``local`` opponents only look at the state and the two observations, which
    lets the simulator detect lassos on unbounded stacks.
    """

    local = True

    def pick(self, automaton, config, aux, options):
        raise NotImplementedError


class RandomOpponent(Opponent):
    """Random choice drawn once per local situation and then kept, so the
    opponent is itself memoryless and closed lassos are real."""

    def __init__(self, seed: int = 0):
        self.rng = random.Random(seed)
        self.memo = {}

    def pick(self, automaton, config, aux, options):
        key = (config[0], automaton.store.observe(config[1]), aux)
        if key not in self.memo:
            self.memo[key] = self.rng.randrange(len(options))
        return options[self.memo[key] % len(options)]


class GreedyOpponent(Opponent):
    """Moves to the successor whose color is best for it, preferring pushes on ties."""

    def __init__(self, player: str):
        self.player = player

    def pick(self, automaton, config, aux, options):
        def score(item):
            rule, _ = item
            c = automaton.color[rule.target]
            good = parity_winner(c) == self.player
            return (0 if good else 1, c if good else -c, 0 if rule.op[0] == "push" else 1)

        return min(options, key=score)


class PositionalOpponent(Opponent):
    """Replays a positional strategy of a closed expansion; configs are full values."""

    local = False

    def __init__(self, strategy: PositionalStrategy):
        self.strategy = strategy

    def pick(self, automaton, config, aux, options):
        target = self.strategy.moves.get(config)
        for rule, nxt in options:
            if (rule.target, nxt) == target:
                return rule, nxt
        return options[0]


# -- simulation --------------------------------------------------------------


@dataclass
class SimulationResult:
    steps: int
    player: Optional[str] = None
    failure: Optional[str] = None
    witness: object = None
    lasso: Optional[tuple] = None  # (start step, end step) of the closing cycle
    cycle_min: Optional[int] = None
    winner: Optional[str] = None
    suffix_min: Optional[int] = None
    colors_seen: set = field(default_factory=set)

    @property
    def favorable(self) -> Optional[bool]:
        return None if self.winner is None else self.winner == self.player


def simulate_store_strategy(
    automaton: StoreAutomaton,
    strategy: StoreStrategy,
    opponent_policy: Opponent,
    start,
    strategy_start,
    steps: int = 10000,
    keep_trace: bool = False,
):
    """Step the product of the game and the strategy automaton.

    Stops at the first failure (missing table entry or a disabled rule), or
    when the play closes a lasso. Two closures are recognised: an exact
    repetition of the product configuration, and, for stack stores moving in
    step with a local opponent, a repetition of the local situation with no
    pop below the earlier stack height in between. In both cases the future
    repeats the cycle forever, so its least color decides the play.
    """
    player = strategy.player
    store, aux_store = automaton.store, strategy.store
    q, value = start
    sq, aux = strategy_start
    res = SimulationResult(0, player)
    trace = [] if keep_trace else None
    colors = []
    pumping = opponent_policy.local and store.height(value) is not None and aux_store.height(aux) is not None
    offset = aux_store.height(aux) - store.height(value) if pumping else None
    seen = {}
    levels = {}
    for n in range(steps + 1):
        if pumping and aux_store.height(aux) - store.height(value) != offset:
            pumping = False
            seen.clear()
        if pumping:
            h = store.height(value)
            key = (q, store.observe(value), sq, aux_store.observe(aux))
        else:
            h = None
            key = (q, value, sq, aux)
        if key in seen:
            i = seen[key]
            cyc = colors[i:n]
            res.lasso = (i, n)
            res.cycle_min = min(cyc)
            res.winner = parity_winner(res.cycle_min)
            res.steps = n
            res.colors_seen = set(colors)
            if trace is not None:
                res.witness = trace
            return res
        seen[key] = n
        if pumping:
            levels.setdefault(h, []).append(key)
        if n == steps:
            break
        colors.append(automaton.color[q])
        if trace is not None:
            trace.append((q, value))
        obs = aux_store.observe(aux)
        if automaton.owner[q] == player:
            entry = strategy.choose.get((sq, obs))
            if entry is None:
                res.failure, res.witness, res.steps = "strategy undefined", (q, value, sq, obs), n
                return res
            aux_op, sq2, rule = entry
            if not automaton.is_enabled(rule, q, value):
                res.failure, res.witness, res.steps = "disabled rule", (q, value, rule), n
                return res
            value2 = store.apply(rule.op, value)
        else:
            options = automaton.enabled(q, value)
            rule, value2 = opponent_policy.pick(automaton, (q, value), obs, options)
            entry = strategy.update.get((sq, obs, rule))
            if entry is None:
                res.failure, res.witness, res.steps = "strategy undefined", (q, value, sq, obs, rule), n
                return res
            aux_op, sq2 = entry
        aux2 = aux_store.apply(aux_op, aux)
        if aux2 is None:
            res.failure, res.witness, res.steps = "auxiliary operation undefined", (aux_op, aux), n
            return res
        if pumping:
            new_h = store.height(value2)
            for level in [lv for lv in levels if lv > new_h]:
                for k in levels.pop(level):
                    seen.pop(k, None)
        q, value, sq, aux = rule.target, value2, sq2, aux2
    res.steps = steps
    res.colors_seen = set(colors)
    tail = colors[len(colors) // 2:]
    res.suffix_min = min(tail) if tail else None
    if trace is not None:
        res.witness = trace
    return res


# -- positional strategies on closed expansions ------------------------------


def store_strategy_from_positional(expansion: Expansion, automaton: StoreAutomaton, strategy: PositionalStrategy, region=None):
    """Wrap a positional strategy of a closed expansion as a store strategy.

    The auxiliary store mirrors the game store and observes its whole value,
    so the tables are indexed by configurations. The strategy's states are
    the automaton's states.
    """
    if not expansion.closed:
        raise StoreError("expansion is not closed")
    arena: ParityArena = expansion.arena
    player = strategy.player
    region = set(arena.vertices) if region is None else set(region)
    choose = {}
    update = {}
    for config in arena.vertices:
        if config not in region:
            continue
        q, value = config
        if arena.owner[config] == player:
            if config not in strategy.moves:
                raise StoreError(f"strategy not total on its region: missing {config!r}")
            target = strategy.moves[config]
            rule = expansion.moves[(config, target)]
            choose[(q, value)] = (rule.op, rule.target, rule)
        else:
            for rule, _ in automaton.enabled(q, value):
                update[(q, value, rule)] = (rule.op, rule.target)
    return StoreStrategy(player, automaton.states, MirrorStore(automaton.store), choose, update)
