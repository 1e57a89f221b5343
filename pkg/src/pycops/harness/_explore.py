import logging
from dataclasses import dataclass
from typing import Callable, List, Optional

from .._solver import DEFAULT_K_MAX, DEFAULT_STATE_BUDGET, SolveResult, solve
from ..errors import CopNumberExceededError, DomainError, InvalidParameterError
from ..game import GameConfig
from ..graphs import Graph

logger = logging.getLogger(__name__)

SolveFunction = Callable[[Graph, GameConfig], SolveResult]


@dataclass
class MonotoneReport:
    """The speed-(s, s) cop numbers of one graph for ``s = 1, 2, ...``.

    Attributes:
        graph_hash: The :meth:`Graph.digest` of the graph
        order: The number of vertices
        radius: The radius, past which one cop always wins
        sequence: The cop number for each speed, starting at speed 1
        increases: The speeds ``s`` whose cop number is larger than at ``s - 1``
    """

    graph_hash: str
    order: int
    radius: int
    sequence: List[int]
    increases: List[int]

    @property
    def monotone(self) -> bool:
        """Whether the sequence never goes up."""
        return len(self.increases) == 0

    def to_dict(self) -> dict:
        return {
            "graph_hash": self.graph_hash,
            "order": self.order,
            "radius": self.radius,
            "sequence": self.sequence,
            "increases": self.increases,
            "monotone": self.monotone,
        }


def _cop_number(graph, config, k_max, solver) -> int:
    for k in range(1, k_max + 1):
        if solver(graph, config.with_cops(k)).cop_win:
            return k
    raise CopNumberExceededError(k_max)


def explore_monotone(
    graph: Graph,
    s_max: int,
    k_max: int = DEFAULT_K_MAX,
    state_budget: int = DEFAULT_STATE_BUDGET,
    solver: Optional[SolveFunction] = None,
) -> MonotoneReport:
    """Compute the speed-(s, s) cop numbers of a graph and flag every increase.

    Speeds run from 1 to the smaller of ``s_max`` and the radius. An increase is
    reported, never raised: the sequence is only conjectured to be nonincreasing.

    Args:
        graph: A connected graph
        s_max: The largest speed to try, at least 1
        k_max: The largest cop count to try at each speed
        state_budget: The state budget of each solve
        solver: How to solve one game, a plain :func:`pycops.solve` by default

    Returns:
        MonotoneReport: The sequence and its increases

    Raises:
        DomainError: If the graph is disconnected
        CopNumberExceededError: If some speed needs more than ``k_max`` cops
        BudgetExceededError: If a game is too large for the budget
    """
    if s_max < 1:
        raise InvalidParameterError("s_max must be at least 1, got %d" % s_max)
    if not graph.is_connected():
        raise DomainError("The cop numbers are only computed on connected graphs")
    if solver is None:

        def solver(g, config):
            return solve(g, config, state_budget=state_budget)

    radius = int(graph.radius()) if graph.order > 1 else 0
    sequence = []
    for s in range(1, max(1, min(s_max, radius)) + 1):
        sequence.append(_cop_number(graph, GameConfig.speed(s), k_max, solver))
    increases = [s + 1 for s in range(1, len(sequence)) if sequence[s] > sequence[s - 1]]
    if increases:
        logger.warning(
            "%r: speed cop numbers %s go up at speeds %s", graph, sequence, increases
        )
    return MonotoneReport(graph.digest(), graph.order, radius, sequence, increases)
