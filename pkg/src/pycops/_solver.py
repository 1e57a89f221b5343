"""Exact solving of the speed-(s, t) game by layered retrograde analysis."""

import logging
import time
from dataclasses import dataclass, field
from itertools import product
from typing import Optional, Tuple, Union

import numpy as np

from .errors import (
    BudgetExceededError,
    CopNumberExceededError,
    DomainError,
    InvalidParameterError,
    InvalidStateError,
    UnsolvedError,
)
from .game import GameConfig, GameState, Phase, StateEncoder, is_capture, robber_moves
from .graphs import INFINITY, Graph, power

logger = logging.getLogger(__name__)

DEFAULT_STATE_BUDGET = 2 ** 28
"""The default limit on the number of canonical states a solve may use."""

DEFAULT_K_MAX = 4
"""The default largest cop count tried when searching for a cop number."""

# Dense tensors of shape (n,) * (k + 1) alive at once during a solve, counted against the budget
LIVE_TENSORS = 12

Value = Union[int, float]


@dataclass(frozen=True)
class SolveResult:
    """The outcome of solving one game.

    Attributes:
        cop_win: Whether the cops can force a capture
        capture_time: The number of cop turns to capture under optimal play, None when the robber wins
        placement: An optimal cop placement, None when the robber wins
        states: The number of canonical states of the game
        sweeps: The number of layers the backward induction took
        millis: The wall-clock time of the solve
        graph_hash: The :meth:`Graph.digest` of the graph solved
        config: The config solved
    """

    cop_win: bool
    capture_time: Optional[int]
    placement: Optional[Tuple[int, ...]]
    states: int
    sweeps: int = 0
    millis: int = 0
    graph_hash: str = ""
    config: Optional[GameConfig] = field(default=None, compare=False)

    def to_dict(self) -> dict:
        return {
            "graph_hash": self.graph_hash,
            "config": self.config.to_dict() if self.config is not None else None,
            "cop_win": self.cop_win,
            "capture_time": self.capture_time,
            "placement": list(self.placement) if self.placement is not None else None,
            "states": self.states,
            "sweeps": self.sweeps,
            "millis": self.millis,
        }

    @staticmethod
    def from_dict(data: dict) -> "SolveResult":
        config = data.get("config")
        return SolveResult(
            cop_win=data["cop_win"],
            capture_time=data["capture_time"],
            placement=tuple(data["placement"]) if data.get("placement") is not None else None,
            states=data["states"],
            sweeps=data.get("sweeps", 0),
            millis=data.get("millis", 0),
            graph_hash=data.get("graph_hash", ""),
            config=GameConfig(**config) if config is not None else None,
        )


class Solver:
    """Solves one game exactly and answers value and optimal-move queries about it.

    Values are computed over ordered cop tuples held as numpy tensors of shape
    ``(n,) * k + (n,)``: one axis per cop and a last axis for the robber. Layer
    ``j`` of the backward induction adds the cop-turn states the cops win
    within ``j`` turns, and the robber-turn states from which every robber move
    reaches an earlier layer. States never added are robber wins. After
    solving, the tables are cut down to canonical (sorted) cop tuples.
    Each layer sweeps the whole tensors, so memory grows as ``n ** (k + 1)``
    however few states are canonical.

    Args:
        graph: A connected graph
        config: The rules
        state_budget: The largest number of canonical states allowed, also the limit on
            cells across the working tensors
        keep_policy: Whether to keep the value tables after solving, needed for values and optimal moves

    Raises:
        DomainError: If the graph is disconnected
        BudgetExceededError: If the game has more canonical states than the budget, or its
            working tensors hold more than the budget in cells
    """

    def __init__(
        self,
        graph: Graph,
        config: GameConfig,
        state_budget: int = DEFAULT_STATE_BUDGET,
        keep_policy: bool = True,
    ):
        if graph.order == 0:
            raise InvalidParameterError("Cannot play on the empty graph")
        if not graph.is_connected():
            raise DomainError("The game is only solved on connected graphs")
        self.graph = graph
        self.config = config
        self.encoder = StateEncoder(graph.order, config.cop_count)
        if self.encoder.count > state_budget:
            raise BudgetExceededError(self.encoder.count, state_budget)
        cells = LIVE_TENSORS * graph.order ** (config.cop_count + 1)
        if cells > state_budget:
            raise BudgetExceededError(cells, state_budget)
        self.keep_policy = keep_policy
        self.result: Optional[SolveResult] = None
        self._cop_values: Optional[np.ndarray] = None
        self._robber_values: Optional[np.ndarray] = None
        self._multisets: Optional[np.ndarray] = None

    @property
    def solved(self) -> bool:
        return self.result is not None

    def _float_type(self, ball: np.ndarray):
        largest = int(ball.sum(axis=1).max()) ** self.config.cop_count
        return np.float32 if largest < 2 ** 24 else np.float64

    def _robber_can_escape(self, good, notcop, adjacency, distances):
        """Mark the robber-turn states from which some legal robber move ends in ``good``."""
        n, t = self.graph.order, self.config.robber_speed
        shape = good.shape
        good = good.reshape(-1, n)
        notcop = notcop.reshape(-1, n)
        allowed = self.config.allowed_end_distances
        f = adjacency.dtype
        if allowed == frozenset(range(t + 1)):
            escape = good & notcop
            for _ in range(t):
                escape = notcop & (escape | ((escape.astype(f) @ adjacency) > 0.5))
            return escape.reshape(shape)
        if t == 1:
            step = np.zeros((n, n), dtype=f)
            if 0 in allowed:
                step += np.eye(n, dtype=f)
            if 1 in allowed:
                step += adjacency
            return (notcop & ((good.astype(f) @ step) > 0.5)).reshape(shape)
        # Minimum end distance with t >= 2: walk forward from each start
        shell = np.isin(distances, sorted(allowed))
        escape = np.zeros_like(good)
        for r in range(n):
            reach = np.zeros_like(good)
            reach[:, r] = notcop[:, r]
            for _ in range(t):
                reach = notcop & (reach | ((reach.astype(f) @ adjacency) > 0.5))
            escape[:, r] = (reach & good & shell[r]).any(axis=1)
        return escape.reshape(shape)

    def _cops_can_reach(self, target, ball):
        """Mark the cop-turn states from which some legal cop move lands in ``target``."""
        counts = target.astype(ball.dtype)
        for i in range(self.config.cop_count):
            counts = np.moveaxis(np.tensordot(counts, ball, axes=([i], [0])), -1, i)
        if self.config.cops_must_move:
            # The all-stay tuple is counted exactly once
            counts = counts - target.astype(counts.dtype)
        return counts > 0.5

    def _solve_tensors(self) -> Tuple[np.ndarray, np.ndarray, int]:
        n, k = self.graph.order, self.config.cop_count
        distances = self.graph.distance_matrix()
        shape = (n,) * (k + 1)
        captured = np.zeros(shape, dtype=bool)
        notcop = np.ones(shape, dtype=bool)
        near = distances <= self.config.capture_radius
        eye = np.eye(n, dtype=bool)
        for i in range(k):
            dims = [n if a in (i, k) else 1 for a in range(k + 1)]
            captured = captured | near.reshape(dims)
            notcop = notcop & ~eye.reshape(dims)
        ball = (distances <= self.config.cop_speed).astype(np.float64)
        f = self._float_type(ball)
        ball = ball.astype(f)
        adjacency = (distances == 1).astype(f)

        cop_values = np.where(captured, 0, -1).astype(np.int32)
        robber_values = np.full(shape, -1, dtype=np.int32)
        cop_won = captured.copy()
        layer = 0
        while True:
            robber_lost = captured | ~self._robber_can_escape(~cop_won, notcop, adjacency, distances)
            robber_values[robber_lost & (robber_values < 0)] = layer
            reached = self._cops_can_reach(robber_lost, ball)
            fresh = reached & ~cop_won
            count = int(fresh.sum())
            logger.debug("Layer %d: %d new cop-turn wins", layer + 1, count)
            if count == 0:
                break
            layer += 1
            cop_values[fresh] = layer
            cop_won |= fresh
        return cop_values, robber_values, layer

    def solve(self) -> SolveResult:
        """Solve the game, including the placement phase.

        The cops place first, then the robber places on any vertex without a
        cop. The capture time is the least, over cop placements, of the most,
        over robber placements, cop turns needed. With no free vertex for the
        robber it is 0.

        Returns:
            SolveResult: The result, also kept as :attr:`result`
        """
        if self.result is not None:
            return self.result
        started = time.perf_counter()
        n, k = self.graph.order, self.config.cop_count
        logger.info(
            "Solving %r with %s: %d canonical states", self.graph, self.config.key(), self.encoder.count
        )
        cop_values, robber_values, sweeps = self._solve_tensors()
        multisets = self.encoder.multisets()
        index = tuple(multisets[:, i] for i in range(k))
        self._cop_values = cop_values[index]
        self._robber_values = robber_values[index]
        self._multisets = multisets
        del cop_values, robber_values

        values = self._cop_values.astype(np.float64)
        values[values < 0] = np.inf
        occupied = np.zeros((len(multisets), n), dtype=bool)
        for i in range(k):
            occupied[np.arange(len(multisets)), multisets[:, i]] = True
        values[occupied] = -np.inf
        placement_values = values.max(axis=1)
        placement_values[placement_values == -np.inf] = 0
        best = int(np.argmin(placement_values))
        cop_win = bool(np.isfinite(placement_values[best]))
        self.result = SolveResult(
            cop_win=cop_win,
            capture_time=int(placement_values[best]) if cop_win else None,
            placement=tuple(int(c) for c in multisets[best]) if cop_win else None,
            states=self.encoder.count,
            sweeps=sweeps,
            millis=int((time.perf_counter() - started) * 1000),
            graph_hash=self.graph.digest(),
            config=self.config,
        )
        logger.info(
            "%s: cop_win=%s capture_time=%s in %d ms",
            self.config.key(),
            self.result.cop_win,
            self.result.capture_time,
            self.result.millis,
        )
        if not self.keep_policy:
            self._cop_values = self._robber_values = None
        return self.result

    def _tables(self):
        if self._cop_values is None:
            raise UnsolvedError("No value tables: solve first, with keep_policy=True")
        return self._cop_values, self._robber_values

    def value(self, state: GameState) -> Value:
        """Get the number of cop turns to capture from a state, :data:`INFINITY` if the robber escapes forever.

        Raises:
            UnsolvedError: If the game has not been solved with its tables kept
            InvalidStateError: If the state is not canonical
        """
        cop_values, robber_values = self._tables()
        rank = self.encoder.rank(state.cops)
        if not 0 <= state.robber < self.graph.order:
            raise InvalidStateError("Robber position %d is not a vertex" % state.robber)
        table = cop_values if state.phase is Phase.COP_TURN else robber_values
        v = int(table[rank, state.robber])
        return INFINITY if v < 0 else v

    def optimal_cop_placement(self) -> Tuple[int, ...]:
        """Get the cop placement that minimises the capture time, lowest rank first on ties.

        Raises:
            DomainError: If the robber wins from every placement
        """
        result = self.solve()
        if not result.cop_win:
            raise DomainError("The robber wins against every placement")
        return result.placement

    def optimal_robber_placement(self, cops) -> Optional[int]:
        """Get the free vertex that maximises the capture time, or None if every vertex has a cop."""
        self._tables()
        cops = tuple(sorted(cops))
        free = [r for r in self.graph.vertices if r not in cops]
        if not free:
            return None
        return max(
            free,
            key=lambda r: (self.value(GameState(cops, r, Phase.COP_TURN)), -r),
        )

    def optimal_cop_move(self, state: GameState) -> GameState:
        """Get a cop move that reaches the least-valued robber-turn state.

        Ties go to the successor with the lowest encoded index.

        Returns:
            GameState: The robber-turn state after the move
        """
        self._tables()
        if state.phase is not Phase.COP_TURN:
            raise InvalidStateError("Expected a cop turn, got %s" % state.phase.name)
        balls = [sorted(self.graph.ball(c, self.config.cop_speed)) for c in state.cops]
        best: Optional[Tuple[Value, int, GameState]] = None
        for choice in product(*balls):
            if self.config.cops_must_move and choice == state.cops:
                continue
            nxt = GameState.of(choice, state.robber, Phase.ROBBER_TURN)
            key = (self.value(nxt), self.encoder.encode(nxt), nxt)
            if best is None or key[:2] < best[:2]:
                best = key
        return best[2]

    def optimal_robber_move(self, state: GameState) -> Optional[GameState]:
        """Get a robber move that reaches the most-valued cop-turn state.

        Ties go to the successor with the lowest encoded index.

        Returns:
            Optional[GameState]: The cop-turn state after the move, or None if the robber has no legal move
        """
        self._tables()
        if state.phase is not Phase.ROBBER_TURN:
            raise InvalidStateError("Expected a robber turn, got %s" % state.phase.name)
        if is_capture(self.graph, self.config, state.cops, state.robber):
            raise InvalidStateError("The robber has already been caught")
        best = None
        for w in robber_moves(self.graph, self.config, state.cops, state.robber):
            nxt = GameState(state.cops, w, Phase.COP_TURN)
            key = (-self.value(nxt), self.encoder.encode(nxt), nxt)
            if best is None or key[:2] < best[:2]:
                best = key
        return best[2] if best is not None else None


def solve(
    graph: Graph,
    config: GameConfig,
    state_budget: int = DEFAULT_STATE_BUDGET,
    keep_policy: bool = False,
) -> SolveResult:
    """Solve one game. See :class:`Solver`."""
    return Solver(graph, config, state_budget=state_budget, keep_policy=keep_policy).solve()


def cop_number(
    graph: Graph,
    config: GameConfig = GameConfig(),
    k_max: int = DEFAULT_K_MAX,
    state_budget: int = DEFAULT_STATE_BUDGET,
) -> int:
    """Get the least number of cops that win, trying ``1..k_max`` in order.

    The ``cop_count`` of ``config`` is ignored.

    Raises:
        InvalidParameterError: If ``k_max < 1``
        CopNumberExceededError: If the robber beats ``k_max`` cops
    """
    if k_max < 1:
        raise InvalidParameterError("k_max must be at least 1, got %d" % k_max)
    for k in range(1, k_max + 1):
        if solve(graph, config.with_cops(k), state_budget=state_budget).cop_win:
            return k
    raise CopNumberExceededError(k_max)


def cop_number_via_power(
    graph: Graph, s: int, k_max: int = DEFAULT_K_MAX, state_budget: int = DEFAULT_STATE_BUDGET
) -> int:
    """Get the classic cop number of the ``s``-th power of a graph.

    This equals the speed-(s, s) cop number, and is computed by a game without
    blocking, so the two cross-check each other.
    """
    return cop_number(power(graph, s), GameConfig(), k_max=k_max, state_budget=state_budget)


def capture_time(graph: Graph, config: GameConfig, state_budget: int = DEFAULT_STATE_BUDGET) -> int:
    """Get the optimal capture time of a game the cops win.

    Raises:
        DomainError: If the robber wins
    """
    result = solve(graph, config, state_budget=state_budget)
    if not result.cop_win:
        raise DomainError(
            "The robber beats %d cop(s), so there is no capture time" % config.cop_count
        )
    return result.capture_time

