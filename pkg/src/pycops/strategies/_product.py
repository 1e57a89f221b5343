"""Strategies for Cartesian and strong products."""

import logging
from typing import List, Optional, Tuple

from ._frame import CoordinateFrame
from ._policies import CopPolicy, RobberPolicy, match_cops
from .._solver import DEFAULT_STATE_BUDGET, Solver
from ..errors import InvalidParameterError, PolicyError
from ..game import GameConfig, GameState, Phase, Variant
from ..graphs import Graph, cartesian_product

logger = logging.getLogger(__name__)


def _is_safe(graph: Graph, cops, v: int, distance: int = 3) -> bool:
    distances = graph.distance_matrix()
    return all(distances[c, v] >= distance for c in cops)


class ProjectiveProductRobber(RobberPolicy):
    """A speed-2 robber who evades ``q`` cops on P □ P, P the incidence graph of a projective plane of order ``q``.

    In P, a vertex ``u`` always has a neighbour at distance 2 or more from up to
    ``q`` other vertices. The robber at ``(u, v)`` plays one speed-1 game in
    each factor: he steps to such a neighbour ``u'`` of ``u``, away from the
    first coordinates of the cops not on ``u``, and to such a neighbour ``v'``
    of ``v`` likewise. At ``(u', v')`` he is at distance 3 or more from every
    cop.

    Args:
        plane: The incidence graph P, numbered as in :func:`pycops.graphs.cartesian_product`
        strict: Whether ending a turn within distance 2 of a cop raises
    """

    def __init__(self, plane: Graph, strict: bool = True):
        super().__init__(strict)
        self.plane = plane

    def _check(self, graph):
        if graph.order != self.plane.order ** 2:
            raise InvalidParameterError("%r is not P □ P for P = %r" % (graph, self.plane))

    def _step(self, here: int, others: List[int]) -> Optional[int]:
        distances = self.plane.distance_matrix()
        for w in sorted(self.plane.neighbors(here)):
            if all(distances[w, o] >= 2 for o in others if o != here):
                return w
        return None

    def _target(self, cops, robber) -> int:
        n = self.plane.order
        u, v = divmod(robber, n)
        firsts = [c // n for c in cops]
        seconds = [c % n for c in cops]
        u2 = self._step(u, firsts)
        v2 = self._step(v, seconds)
        if u2 is None or v2 is None:
            raise PolicyError(
                "No neighbour of %d stays 2 away from the cops' coordinates"
                % (u if u2 is None else v)
            )
        return u2 * n + v2

    def place(self, graph, config, cops):
        self._check(graph)
        start = next((v for v in graph.vertices if v not in cops), None)
        if start is None:
            raise PolicyError("Every vertex holds a cop")
        target = self._target(cops, start)
        self._record("safe_vertex", _is_safe(graph, cops, target), "bad start %d" % target)
        return target

    def move(self, graph, config, cops, robber):
        self.last_checks = {}
        self._check(graph)
        target = self._target(cops, robber)
        self._record(
            "safe_vertex",
            _is_safe(graph, cops, target),
            "moved within distance 2 of a cop at %d" % target,
        )
        return target


class TorusCoordinateRobber(RobberPolicy):
    """A robber who evades ``k`` cops on the ``k``-fold strong product of C_{2s+2}.

    Cop ``i`` is watched in coordinate ``i`` only: the robber always moves to
    the vertex whose ``i``-th coordinate is ``s + 1`` (half way round) from
    that of cop ``i``. A cop at speed ``s`` or less cannot close that gap in
    one turn.

    Args:
        s: The speed the product is built for
        strict: Whether a wrong coordinate offset raises
    """

    def __init__(self, s: int, strict: bool = True):
        super().__init__(strict)
        if s < 1:
            raise InvalidParameterError("Speed must be at least 1, got %d" % s)
        self.s = s
        self._frame: Optional[CoordinateFrame] = None

    def _setup(self, graph, config) -> CoordinateFrame:
        if self._frame is None or self._frame.graph is not graph:
            frame = CoordinateFrame(graph, cyclic=[True] * len(graph.coords[0]))
            if any(size != 2 * self.s + 2 for size in frame.sizes):
                raise InvalidParameterError(
                    "Expected cycles of length %d, got %s" % (2 * self.s + 2, frame.sizes)
                )
            self._frame = frame
        if config.cop_count > self._frame.dimension:
            raise InvalidParameterError(
                "%d cops need at least as many coordinates, got %d"
                % (config.cop_count, self._frame.dimension)
            )
        return self._frame

    def _target(self, frame, cops, base: int) -> int:
        coords = list(frame[base])
        for i, c in enumerate(cops):
            coords[i] = frame[c][i] + self.s + 1
        return frame.vertex(coords)

    def _check_offsets(self, frame, cops, target):
        ok = all(abs(frame.offset(c, target, i)) == self.s + 1 for i, c in enumerate(cops))
        self._record("coordinate_offset", ok, "some coordinate is not half way round")

    def place(self, graph, config, cops):
        frame = self._setup(graph, config)
        target = self._target(frame, cops, 0)
        self._check_offsets(frame, cops, target)
        return target

    def move(self, graph, config, cops, robber):
        self.last_checks = {}
        frame = self._setup(graph, config)
        target = self._target(frame, cops, robber)
        self._check_offsets(frame, cops, target)
        return target


class TwoPhaseProductCops(CopPolicy):
    """Cops for G □ H, made of a team that wins the semi-active game on G and a team that wins a restricted game on H.

    The first ``g_cops`` cops are G-cops and the rest are H-cops. Each cop
    first catches the robber's shadow in the other factor: a G-cop walks
    toward his H-coordinate, an H-cop toward his G-coordinate, ``s`` steps
    a turn. Once she has it she copies his moves in that factor so she
    keeps it.

    When every G-cop holds the robber's H-coordinate, after the robber moves
    from ``(u1, v1)`` to ``(u2, v2)`` they copy his move in H and then:

    - if ``u1 != u2``, answer each of his steps in G with a solver-optimal move of the semi-active game on G;
    - if ``u1 == u2`` and he moved at most ``s - 2`` in H, answer an imagined step of his away from ``u1`` and back;
    - otherwise stay put in G.

    When every H-cop holds the robber's G-coordinate, they copy his moves in G,
    and when he moved ``s - 1`` or ``s`` within H alone they make a
    solver-optimal move of the game on H in which the robber must end each
    turn at distance ``s - 1`` or ``s``.

    A cop that can get within the capture radius of the robber always does.

    Args:
        g: The first factor
        h: The second factor
        g_cops: The number of G-cops
        s: The common speed, at least 2
        state_budget: The state budget of the two factor solvers
        strict: Whether a failed check raises

    Attributes:
        phase_two (List[bool]): Whether each cop holds the robber's shadow
        g_progress (int): The rounds in which the G-cops played their game on G
        h_progress (int): The rounds in which the H-cops played their game on H
    """

    def __init__(
        self,
        g: Graph,
        h: Graph,
        g_cops: int,
        s: int,
        state_budget: int = DEFAULT_STATE_BUDGET,
        strict: bool = True,
    ):
        super().__init__(strict)
        if s < 2:
            raise InvalidParameterError("Speed must be at least 2, got %d" % s)
        if g_cops < 1:
            raise InvalidParameterError("Need at least one G-cop, got %d" % g_cops)
        self.g = g
        self.h = h
        self.g_cops = g_cops
        self.s = s
        self.state_budget = state_budget
        self.g_solver = Solver(
            g, GameConfig(cop_count=g_cops, variant=Variant.SEMI_ACTIVE), state_budget
        )
        self.h_solver: Optional[Solver] = None
        self._product = cartesian_product(g, h)
        self._reset(0)

    def _reset(self, count: int):
        self.phase_two = [False] * count
        self.g_progress = 0
        self.h_progress = 0
        self._gaps: List[Optional[int]] = [None] * count
        self._robber: Optional[int] = None

    def _split(self, v: int) -> Tuple[int, int]:
        return divmod(v, self.h.order)

    def _join(self, a: int, b: int) -> int:
        return a * self.h.order + b

    @staticmethod
    def _toward(factor: Graph, here: int, target: int, steps: int) -> int:
        distances = factor.distance_matrix()
        for _ in range(steps):
            if here == target:
                break
            here = min(w for w in factor.neighbors(here) if distances[w, target] < distances[here, target])
        return here

    def place(self, graph, config):
        if graph != self._product:
            raise InvalidParameterError("%r is not the product of the two factors" % graph)
        if config.cop_speed != self.s or config.robber_speed != self.s:
            raise InvalidParameterError("Expected speed %d, got %s" % (self.s, config.key()))
        h_cops = config.cop_count - self.g_cops
        if h_cops < 1:
            raise InvalidParameterError(
                "%d cops leave no H-cop after %d G-cops" % (config.cop_count, self.g_cops)
            )
        self.h_solver = Solver(
            self.h,
            GameConfig.speed(self.s, h_cops, variant=Variant.RESTRICTED),
            self.state_budget,
        )
        g_result = self.g_solver.solve()
        h_result = self.h_solver.solve()
        logger.info(
            "Factor games: G cop_win=%s, H cop_win=%s", g_result.cop_win, h_result.cop_win
        )
        g_start = g_result.placement or (0,) * self.g_cops
        h_start = h_result.placement or (0,) * h_cops
        self._reset(config.cop_count)
        return tuple(self._join(a, 0) for a in g_start) + tuple(
            self._join(0, b) for b in h_start
        )

    def _g_respond(self, positions: Tuple[int, ...], robber: int) -> Tuple[int, ...]:
        best = self.g_solver.optimal_cop_move(GameState.of(positions, robber, Phase.COP_TURN))
        return match_cops(self.g, 1, positions, best.cops)

    def _g_team(self, new, u1, u2, v2, budget):
        ids = range(self.g_cops)
        positions = tuple(new[i][0] for i in ids)
        if u1 != u2:
            here = u1
            while here != u2:
                here = self._toward(self.g, here, u2, 1)
                positions = self._g_respond(positions, here)
            self.g_progress += 1
        elif budget >= 2 and u1 not in positions:
            away = self.g_solver.optimal_robber_move(
                GameState.of(positions, u1, Phase.ROBBER_TURN)
            )
            if away is not None:
                positions = self._g_respond(positions, away.robber)
                if u1 not in positions:
                    positions = self._g_respond(positions, u1)
            self.g_progress += 1
        for i, a in zip(ids, positions):
            new[i] = (a, v2)

    def _h_team(self, new, u1, u2, v1, v2):
        ids = range(self.g_cops, len(new))
        for j in ids:
            new[j] = (u2, new[j][1])
        moved = int(self.h.distance_matrix()[v1, v2])
        if u1 == u2 and moved in (self.s - 1, self.s):
            positions = tuple(new[j][1] for j in ids)
            best = self.h_solver.optimal_cop_move(GameState.of(positions, v2, Phase.COP_TURN))
            positions = match_cops(self.h, self.s, positions, best.cops)
            for j, b in zip(ids, positions):
                new[j] = (u2, b)
            self.h_progress += 1

    def move(self, graph, config, cops, robber):
        self.last_checks = {}
        distances = graph.distance_matrix()
        for i, c in enumerate(cops):
            near = [
                w for w in sorted(graph.ball(c, self.s)) if distances[w, robber] <= config.capture_radius
            ]
            if near:
                return tuple(near[0] if j == i else d for j, d in enumerate(cops))
        u2, v2 = self._split(robber)
        u1, v1 = self._split(self._robber if self._robber is not None else robber)
        self._robber = robber
        new = [self._split(c) for c in cops]
        g_ids = range(self.g_cops)
        h_ids = range(self.g_cops, len(cops))

        if all(self.phase_two[i] for i in g_ids):
            budget = self.s - int(self.h.distance_matrix()[v1, v2])
            self._g_team(new, u1, u2, v2, budget)
        else:
            for i in g_ids:
                a, b = new[i]
                new[i] = (a, v2 if self.phase_two[i] else self._toward(self.h, b, v2, self.s))

        if all(self.phase_two[j] for j in h_ids):
            self._h_team(new, u1, u2, v1, v2)
        else:
            for j in h_ids:
                a, b = new[j]
                new[j] = (u2 if self.phase_two[j] else self._toward(self.g, a, u2, self.s), b)

        g_dist, h_dist = self.g.distance_matrix(), self.h.distance_matrix()
        for i, (a, b) in enumerate(new):
            if self.phase_two[i]:
                continue
            gap = int(h_dist[b, v2] if i < self.g_cops else g_dist[a, u2])
            if self._gaps[i] is not None:
                self._record(
                    "phase_one_gap_nonincreasing",
                    gap <= self._gaps[i],
                    "cop %d fell from %d to %d behind the robber's shadow"
                    % (i, self._gaps[i], gap),
                )
            self._gaps[i] = gap
            self.phase_two[i] = gap == 0
        return tuple(self._join(a, b) for a, b in new)
