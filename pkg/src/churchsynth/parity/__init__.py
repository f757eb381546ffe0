from .arena import (
    I,
    II,
    ArenaError,
    ParityArena,
    PositionalStrategy,
    WinningRegions,
    opponent,
    parity_winner,
    sorted_vertices,
    validate_arena,
    vertex_key,
)
from .coding import (
    LocalLinearOrder,
    StrategyCode,
    arena_order,
    decode_strategy,
    encode_strategy,
    local_linear_order,
)
from .solver import solve
from .verify import (
    Lasso,
    Verdict,
    brute_force_regions,
    play_positional,
    strategy_wins_everywhere,
    verify_strategy,
)

__all__ = [
    "I",
    "II",
    "ArenaError",
    "ParityArena",
    "PositionalStrategy",
    "WinningRegions",
    "opponent",
    "parity_winner",
    "sorted_vertices",
    "validate_arena",
    "vertex_key",
    "LocalLinearOrder",
    "StrategyCode",
    "arena_order",
    "decode_strategy",
    "encode_strategy",
    "local_linear_order",
    "solve",
    "Lasso",
    "Verdict",
    "brute_force_regions",
    "play_positional",
    "strategy_wins_everywhere",
    "verify_strategy",
]
