"""Submodule that holds the rules of the game: configs, states, their encoding and legal moves."""

from ._config import GameConfig
from ._rules import (
    cop_sub_moves,
    cop_turn_successors,
    is_capture,
    robber_moves,
    robber_turn_successors,
    sequential_cop_successors,
)
from ._state import GameState, StateEncoder
from ._variant import Phase, Variant

__all__ = [
    "GameConfig",
    "GameState",
    "Phase",
    "StateEncoder",
    "Variant",
    "cop_sub_moves",
    "cop_turn_successors",
    "is_capture",
    "robber_moves",
    "robber_turn_successors",
    "sequential_cop_successors",
]
