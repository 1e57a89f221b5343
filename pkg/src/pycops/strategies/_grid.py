"""Strategies for Cartesian products of paths."""

from typing import List, Optional

from ._frame import CoordinateFrame
from ._policies import CopPolicy, RobberPolicy, distance_half_predicate
from ..errors import InvalidParameterError, PolicyError


def _check_speed(s: int):
    if s < 2:
        raise InvalidParameterError("Speed must be at least 2, got %d" % s)


class GridBlockingRobber(RobberPolicy):
    """A robber who outruns ``k`` cops on a product of at least ``2k + 1`` long paths.

    A cop at distance ``x`` blocks the forward (backward) direction of
    dimension ``i`` when she lies ahead of (behind) the robber there and her
    distance in that dimension is at least ``x / 2``. Each cop blocks at most
    two directions, so with ``d >= 2k + 1`` some dimension has neither
    direction blocked. The robber walks ``s`` steps straight along it. No cop
    then gets ``x / 2`` or more of those steps toward her, which leaves every
    cop more than ``s`` away.

    Of the directions available the robber takes the one that leaves him
    farthest from the nearest cop.

    Args:
        s: The common speed, at least 2
        strict: Whether a failed check raises

    Raises:
        InvalidParameterError: If ``s < 2``
    """

    def __init__(self, s: int, strict: bool = True):
        super().__init__(strict)
        _check_speed(s)
        self.s = s
        self._frame: Optional[CoordinateFrame] = None

    def _frame_for(self, graph) -> CoordinateFrame:
        if self._frame is None or self._frame.graph is not graph:
            frame = CoordinateFrame(graph)
            if any(size - 1 < 2 * self.s for size in frame.sizes):
                raise InvalidParameterError(
                    "Every path needs diameter at least %d, got sizes %s"
                    % (2 * self.s, frame.sizes)
                )
            self._frame = frame
        return self._frame

    def place(self, graph, config, cops):
        self._frame_for(graph)
        distances = graph.distance_matrix()
        free = [v for v in graph.vertices if v not in cops]
        return max(free, key=lambda v: (min(int(distances[c, v]) for c in cops), -v))

    def blocked_directions(self, graph, cops, robber) -> set:
        """Get the ``(dimension, +1 or -1)`` pairs some cop blocks."""
        frame = self._frame_for(graph)
        distances = graph.distance_matrix()
        blocked = set()
        for c in cops:
            x = int(distances[robber, c])
            for i in range(frame.dimension):
                ahead = frame.offset(robber, c, i)
                if ahead != 0 and 2 * abs(ahead) >= x:
                    blocked.add((i, 1 if ahead > 0 else -1))
        return blocked

    def _walk(self, frame, robber, dim, direction) -> List[int]:
        return [frame.shift(robber, dim, direction * j) for j in range(self.s + 1)]

    def move(self, graph, config, cops, robber):
        self.last_checks = {}
        frame = self._frame_for(graph)
        distances = graph.distance_matrix()
        blocked = self.blocked_directions(graph, cops, robber)
        y = frame[robber]
        options = []
        for i in range(frame.dimension):
            if (i, 1) in blocked or (i, -1) in blocked:
                continue
            for direction in (1, -1):
                if 0 <= y[i] + direction * self.s < frame.sizes[i]:
                    walk = self._walk(frame, robber, i, direction)
                    nearest = min(int(distances[c, walk[-1]]) for c in cops)
                    options.append((-nearest, i, -direction, walk))
        if not options:
            raise PolicyError(
                "Every dimension has a blocked direction (%d cops, %d dimensions)"
                % (len(cops), frame.dimension)
            )
        walk = min(options)[3]
        fewer = all(
            2 * sum(distances[c, b] < distances[c, a] for a, b in zip(walk, walk[1:]))
            < distances[c, robber]
            for c in cops
        )
        self._record("fewer_than_half_toward", fewer, "a cop gained half her distance")
        self._record(
            "half_distance_rule",
            all(distance_half_predicate(graph, c, walk) for c in cops),
            "a cop can reach the robber after his walk",
        )
        return walk[-1]


class GridSingleCop(CopPolicy):
    """A single cop that catches the robber on a product of two paths.

    The cop takes her ``s`` steps one at a time. Each step closes in on the
    robber in one dimension, choosing the step that makes the larger of the two
    dimension distances ``D1`` and ``D2`` smallest, and never brings a nonzero
    dimension distance to zero. She stops early when no such step is left and
    captures outright whenever the robber is within ``s``.

    While she closes the full ``s`` steps on her turn, ``D1 + D2`` cannot be
    larger at the start of her next turn; this is recorded as
    ``total_distance_nonincreasing``.

    Args:
        s: The common speed, at least 2
        strict: Whether a failed check raises

    Raises:
        InvalidParameterError: If ``s < 2``
    """

    def __init__(self, s: int, strict: bool = True):
        super().__init__(strict)
        _check_speed(s)
        self.s = s
        self._frame: Optional[CoordinateFrame] = None
        self._previous_total: Optional[int] = None
        self._closed_fully = False

    def place(self, graph, config):
        if config.cop_count != 1:
            raise InvalidParameterError(
                "This is a one-cop strategy, got %d cops" % config.cop_count
            )
        frame = CoordinateFrame(graph)
        if frame.dimension != 2:
            raise InvalidParameterError(
                "This strategy plays on two paths, got %d dimensions" % frame.dimension
            )
        self._frame = frame
        self._previous_total = None
        self._closed_fully = False
        return (frame.vertex([size // 2 for size in frame.sizes]),)

    def move(self, graph, config, cops, robber):
        self.last_checks = {}
        frame = self._frame
        cop = cops[0]
        gaps = frame.gaps(cop, robber)
        total = sum(gaps)
        if self._closed_fully:
            self._record(
                "total_distance_nonincreasing",
                total <= self._previous_total,
                "D1 + D2 went from %d to %d" % (self._previous_total, total),
            )
        self._previous_total = total
        if graph.distance_matrix()[cop, robber] <= self.s:
            self._closed_fully = False
            return (robber,)
        steps = 0
        while steps < self.s:
            best = None
            for w in sorted(graph.neighbors(cop)):
                after = frame.gaps(w, robber)
                if sum(after) >= sum(gaps):
                    continue
                if any(a == 0 and g > 0 for a, g in zip(after, gaps)):
                    continue
                if best is None or max(after) < best[0]:
                    best = (max(after), w, after)
            if best is None:
                break
            _, cop, gaps = best
            steps += 1
        self._closed_fully = steps == self.s
        return (cop,)
