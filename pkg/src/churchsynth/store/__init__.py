from .automaton import DeadConfiguration, Expansion, Rule, StoreAutomaton, expand_configuration_game, pushdown_automaton
from .pushdown import ClaimGame, PushdownSolution, solve_pushdown_game
from .stores import (
    POP,
    SKIP,
    AbstractStore,
    BoundedCounterStore,
    FrameStack,
    MirrorStore,
    PushdownStore,
    StoreError,
    op_text,
    push,
)
from .strategy import (
    GreedyOpponent,
    Opponent,
    PositionalOpponent,
    RandomOpponent,
    SimulationResult,
    StoreStrategy,
    simulate_store_strategy,
    store_strategy_from_positional,
)

__all__ = [
    "DeadConfiguration",
    "Expansion",
    "Rule",
    "StoreAutomaton",
    "expand_configuration_game",
    "pushdown_automaton",
    "ClaimGame",
    "PushdownSolution",
    "solve_pushdown_game",
    "POP",
    "SKIP",
    "AbstractStore",
    "BoundedCounterStore",
    "FrameStack",
    "MirrorStore",
    "PushdownStore",
    "StoreError",
    "op_text",
    "push",
    "GreedyOpponent",
    "Opponent",
    "PositionalOpponent",
    "RandomOpponent",
    "SimulationResult",
    "StoreStrategy",
    "simulate_store_strategy",
    "store_strategy_from_positional",
]
