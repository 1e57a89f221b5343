"""A python module for solving speed-(s, t) Cops and Robbers exactly and checking results about it."""

__version__ = "1.0.0"

from ._solver import (
    DEFAULT_K_MAX,
    DEFAULT_STATE_BUDGET,
    SolveResult,
    Solver,
    capture_time,
    cop_number,
    cop_number_via_power,
    solve,
)

__all__ = [
    "DEFAULT_K_MAX",
    "DEFAULT_STATE_BUDGET",
    "SolveResult",
    "Solver",
    "capture_time",
    "cop_number",
    "cop_number_via_power",
    "solve",
    "errors",
    "game",
    "graphs",
    "harness",
    "strategies",
    "structure",
]
