"""Submodule for explicit strategies, the engine that plays them and the traces it records."""

from ._frame import CoordinateFrame
from ._grid import GridBlockingRobber, GridSingleCop
from ._hypercube import HypercubeWeightRobber
from ._policies import (
    DEFAULT_HORIZON,
    CopPolicy,
    GreedyCop,
    OptimalCop,
    OptimalRobber,
    RandomCop,
    RandomRobber,
    RobberPolicy,
    distance_half_predicate,
    match_cops,
    simulate,
)
from ._product import ProjectiveProductRobber, TorusCoordinateRobber, TwoPhaseProductCops
from ._trace import StrategyTrace, TraceRecord, check_cop_move, check_robber_move, replay

__all__ = [
    "DEFAULT_HORIZON",
    "CoordinateFrame",
    "CopPolicy",
    "GreedyCop",
    "GridBlockingRobber",
    "GridSingleCop",
    "HypercubeWeightRobber",
    "OptimalCop",
    "OptimalRobber",
    "ProjectiveProductRobber",
    "RandomCop",
    "RandomRobber",
    "RobberPolicy",
    "StrategyTrace",
    "TorusCoordinateRobber",
    "TraceRecord",
    "TwoPhaseProductCops",
    "check_cop_move",
    "check_robber_move",
    "distance_half_predicate",
    "match_cops",
    "replay",
    "simulate",
]
