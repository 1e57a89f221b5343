"""Policies for both sides and the engine that plays them against each other."""

import logging
import random
from itertools import permutations
from typing import Dict, Optional, Sequence, Tuple

import numpy as np

from ._trace import (
    StrategyTrace,
    TraceRecord,
    check_cop_move,
    check_robber_move,
    robber_is_caught,
)
from .._solver import Solver
from ..errors import InvalidParameterError, PolicyError
from ..game import GameConfig, GameState, Phase, is_capture, robber_moves
from ..graphs import Graph

logger = logging.getLogger(__name__)

DEFAULT_HORIZON = 200
"""The default number of rounds a simulation runs before the robber is said to survive."""

Cops = Tuple[int, ...]


class _Policy:
    """Shared bookkeeping for invariant checks.

    Args:
        strict: Whether a failed check raises instead of only being recorded

    Attributes:
        last_checks (Dict[str, bool]): The checks recorded on the policy's last turn
    """

    def __init__(self, strict: bool = True):
        self.strict = strict
        self.last_checks: Dict[str, bool] = {}

    def _record(self, name: str, ok: bool, message: str):
        self.last_checks[name] = bool(ok)
        if not ok and self.strict:
            raise PolicyError("%s failed: %s" % (name, message))


class CopPolicy(_Policy):
    """Chooses where the cops start and how they move.

    Cops keep their identities: positions are passed and returned in cop order.
    """

    def place(self, graph: Graph, config: GameConfig) -> Cops:
        """Get the starting vertex of each cop."""
        raise NotImplementedError

    def move(self, graph: Graph, config: GameConfig, cops: Cops, robber: int) -> Cops:
        """Get the position of each cop after a cop turn."""
        raise NotImplementedError


class RobberPolicy(_Policy):
    """Chooses where the robber starts and how he moves."""

    def place(self, graph: Graph, config: GameConfig, cops: Cops) -> int:
        """Get the robber's starting vertex, given where the cops are."""
        raise NotImplementedError

    def move(self, graph: Graph, config: GameConfig, cops: Cops, robber: int) -> int:
        """Get the robber's vertex after his turn. Only called when he has a legal move."""
        raise NotImplementedError


def _center_order(graph: Graph):
    eccentricity = graph.distance_matrix().max(axis=1)
    return sorted(graph.vertices, key=lambda v: (int(eccentricity[v]), v))


def _reach(config: GameConfig) -> int:
    return config.cop_speed + config.capture_radius


def _closest(graph: Graph, options, target: int) -> int:
    distances = graph.distance_matrix()[target]
    return min(options, key=lambda v: (int(distances[v]), v))


class GreedyCop(CopPolicy):
    """Cops that each walk straight at the robber.

    The cops start on the most central vertices. On each turn a cop that can
    reach the robber does so, and every other cop moves to the vertex of her
    ball closest to him.
    """

    def place(self, graph, config):
        order = _center_order(graph)
        return tuple(order[i % len(order)] for i in range(config.cop_count))

    def move(self, graph, config, cops, robber):
        self.last_checks = {}
        moved = tuple(
            _closest(graph, graph.ball(c, config.cop_speed), robber) for c in cops
        )
        if config.cops_must_move and moved == tuple(cops):
            first = sorted(graph.ball(cops[0], config.cop_speed) - {cops[0]})[0]
            moved = (first,) + moved[1:]
        return moved


class RandomCop(CopPolicy):
    """Cops that capture when they can and otherwise mix greedy and random steps.

    Args:
        seed: The seed of the policy's own random generator
        greed: The chance that a cop takes the greedy step rather than a random one
    """

    def __init__(
        self, seed: Optional[int] = None, greed: float = 0.5, strict: bool = True
    ):
        super().__init__(strict)
        if not 0 <= greed <= 1:
            raise InvalidParameterError("greed must be in [0, 1], got %s" % greed)
        self.random = random.Random(seed)
        self.greed = greed

    def place(self, graph, config):
        return tuple(
            self.random.randrange(graph.order) for _ in range(config.cop_count)
        )

    def move(self, graph, config, cops, robber):
        self.last_checks = {}
        distances = graph.distance_matrix()
        out = []
        for c in cops:
            ball = sorted(graph.ball(c, config.cop_speed))
            greedy = self.random.random() < self.greed
            if distances[c, robber] <= _reach(config) or greedy:
                out.append(_closest(graph, ball, robber))
            else:
                out.append(self.random.choice(ball))
        if config.cops_must_move and tuple(out) == tuple(cops):
            others = sorted(graph.ball(cops[0], config.cop_speed) - {cops[0]})
            out[0] = self.random.choice(others)
        return tuple(out)


class RandomRobber(RobberPolicy):
    """A robber who picks at random, among the moves the cops cannot punish next turn if there are any.

    Args:
        seed: The seed of the policy's own random generator
    """

    def __init__(self, seed: Optional[int] = None, strict: bool = True):
        super().__init__(strict)
        self.random = random.Random(seed)

    def _safe(self, graph, config, cops, options):
        distances = graph.distance_matrix()
        reach = _reach(config)
        return [v for v in options if all(distances[c, v] > reach for c in cops)]

    def place(self, graph, config, cops):
        free = [v for v in graph.vertices if v not in cops] or list(graph.vertices)
        return self.random.choice(self._safe(graph, config, cops, free) or free)

    def move(self, graph, config, cops, robber):
        self.last_checks = {}
        options = sorted(robber_moves(graph, config, cops, robber))
        return self.random.choice(self._safe(graph, config, cops, options) or options)


def match_cops(
    graph: Graph, speed: int, old: Sequence[int], new: Sequence[int]
) -> Cops:
    """Match the positions of a sorted move back to the cops that can make it."""
    distances = graph.distance_matrix()
    for order in permutations(new):
        if all(distances[a, b] <= speed for a, b in zip(old, order)):
            return tuple(int(b) for b in order)
    raise PolicyError("No cop can take each of the positions %s" % (tuple(new),))


def _check_solver(solver: Solver, graph: Graph, config: GameConfig):
    if solver.graph != graph or solver.config != config:
        raise InvalidParameterError(
            "The solver plays %s on %r, not %s on %r"
            % (solver.config.key(), solver.graph, config.key(), graph)
        )
    solver.solve()


class OptimalCop(CopPolicy):
    """Cops that follow a solver's optimal moves.

    From states the cops cannot win, and for the placement of a game the robber
    wins, there is no optimal move to follow and the fallback policy plays
    instead.

    Args:
        solver: A solver for the game being simulated, with its tables kept
        fallback: The policy for lost states, greedy by default
    """

    def __init__(
        self,
        solver: Solver,
        fallback: Optional[CopPolicy] = None,
        strict: bool = True,
    ):
        super().__init__(strict)
        self.solver = solver
        self.fallback = fallback if fallback is not None else GreedyCop(strict=strict)

    def place(self, graph, config):
        _check_solver(self.solver, graph, config)
        if self.solver.result.cop_win:
            return self.solver.optimal_cop_placement()
        return self.fallback.place(graph, config)

    def move(self, graph, config, cops, robber):
        self.last_checks = {}
        state = GameState.of(cops, robber, Phase.COP_TURN)
        if self.solver.value(state) == float("inf"):
            return self.fallback.move(graph, config, cops, robber)
        best = self.solver.optimal_cop_move(state)
        return match_cops(graph, config.cop_speed, cops, best.cops)


class OptimalRobber(RobberPolicy):
    """A robber who follows a solver's optimal moves, staying free for as long as possible.

    Args:
        solver: A solver for the game being simulated, with its tables kept
    """

    def __init__(self, solver: Solver, strict: bool = True):
        super().__init__(strict)
        self.solver = solver

    def place(self, graph, config, cops):
        _check_solver(self.solver, graph, config)
        placed = self.solver.optimal_robber_placement(cops)
        return placed if placed is not None else cops[0]

    def move(self, graph, config, cops, robber):
        self.last_checks = {}
        state = GameState.of(cops, robber, Phase.ROBBER_TURN)
        best = self.solver.optimal_robber_move(state)
        return best.robber


def distance_half_predicate(graph: Graph, cop: int, walk: Sequence[int]) -> bool:
    """Check the half-distance rule for one robber walk against one cop.

    On a Cartesian product of trees, a robber at distance ``x`` from a cop who
    walks ``s`` steps with fewer than ``x / 2`` of them toward her ends more
    than ``s`` from her, so she cannot catch him on her next turn.

    Args:
        graph: The graph
        cop: The cop's vertex
        walk: The robber's vertices, start first, each adjacent to the next

    Returns:
        bool: False only if the walk takes fewer than ``x / 2`` steps toward the cop and still ends within ``s`` of her

    Raises:
        InvalidParameterError: If the walk is empty or skips an edge
    """
    if len(walk) == 0:
        raise InvalidParameterError("A walk needs at least its start vertex")
    for a, b in zip(walk, walk[1:]):
        if not graph.has_edge(a, b):
            raise InvalidParameterError("%d and %d are not adjacent" % (a, b))
    distances = graph.distance_matrix()[cop]
    toward = sum(1 for a, b in zip(walk, walk[1:]) if distances[b] < distances[a])
    if 2 * toward >= distances[walk[0]]:
        return True
    return bool(distances[walk[-1]] > len(walk) - 1)


def _round_checks(graph, config, cops, robber, *policies) -> Dict[str, bool]:
    checks = {}
    for policy in policies:
        checks.update(policy.last_checks)
    distances = graph.distance_matrix()[:, robber]
    checks["robber_out_of_reach"] = bool(np.all(distances[list(cops)] > _reach(config)))
    return checks


def simulate(
    graph: Graph,
    config: GameConfig,
    cop_policy: CopPolicy,
    robber_policy: RobberPolicy,
    horizon: int = DEFAULT_HORIZON,
) -> StrategyTrace:
    """Play two policies against each other.

    The cops place, then the robber, then the sides alternate from a cop turn.
    A robber left with no legal move after a cop turn counts as caught. Every
    move is checked against the rules, and after every robber turn the trace
    records the policies' own checks plus ``robber_out_of_reach``: whether no
    cop can catch him on the next turn.

    Args:
        graph: The graph
        config: The rules
        cop_policy: The cops' policy
        robber_policy: The robber's policy
        horizon: The number of rounds after which the robber has survived

    Returns:
        StrategyTrace: The game as played

    Raises:
        InvalidParameterError: If the horizon is below 1 or the graph is empty
        PolicyError: If a policy makes an illegal move or one of its checks fails, naming the round
    """
    if horizon < 1:
        raise InvalidParameterError("The horizon must be at least 1, got %d" % horizon)
    if graph.order == 0:
        raise InvalidParameterError("Cannot play on the empty graph")
    round_number = 0
    try:
        cops = tuple(int(c) for c in cop_policy.place(graph, config))
        if len(cops) != config.cop_count or not all(0 <= c < graph.order for c in cops):
            raise PolicyError("Bad cop placement %s" % (cops,))
        robber = int(robber_policy.place(graph, config, cops))
        free = [v for v in graph.vertices if v not in cops]
        if free and robber not in free:
            raise PolicyError("The robber cannot start on %d" % robber)
        trace = StrategyTrace()
        checks = _round_checks(graph, config, cops, robber, robber_policy)
        trace.records.append(TraceRecord(0, cops, robber, checks))
        if is_capture(graph, config, cops, robber):
            trace.captured = True
            return trace
        for round_number in range(1, horizon + 1):
            robber_policy.last_checks = {}
            moved = tuple(int(c) for c in cop_policy.move(graph, config, cops, robber))
            check_cop_move(graph, config, cops, moved, round_number)
            cops = moved
            if robber_is_caught(graph, config, cops, robber):
                checks = dict(cop_policy.last_checks)
                trace.records.append(TraceRecord(round_number, cops, robber, checks))
                trace.captured = True
                trace.rounds = round_number
                logger.debug("Caught in round %d", round_number)
                return trace
            target = int(robber_policy.move(graph, config, cops, robber))
            check_robber_move(graph, config, cops, robber, target, round_number)
            robber = target
            checks = _round_checks(
                graph, config, cops, robber, cop_policy, robber_policy
            )
            trace.records.append(TraceRecord(round_number, cops, robber, checks))
            if is_capture(graph, config, cops, robber):
                trace.captured = True
                trace.rounds = round_number
                return trace
    except PolicyError as e:
        if e.round_number is None:
            raise PolicyError(str(e), round_number) from e
        raise
    trace.rounds = horizon
    logger.debug("Survived %d rounds", horizon)
    return trace
