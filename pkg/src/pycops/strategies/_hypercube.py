from typing import Dict, List, Optional, Set

from ._frame import CoordinateFrame
from ._policies import RobberPolicy
from ..errors import InvalidParameterError, PolicyError

SAFE_DISTANCE = 3
"""How far from every cop the robber ends each turn."""


class HypercubeWeightRobber(RobberPolicy):
    """A speed-2 robber who evades ``k - 1`` cops on Q_{2k} by weighing dimensions.

    After the cops move, every dimension gets a weight. A cop at distance 1 or
    2 adds 1 to each dimension where she differs from the robber, and a cop at
    distance 3 or 4 adds 1/2 to each of hers. Cops farther away are ignored.
    The robber then moves in two dimensions, picked in this order:

    1. two dimensions of weight 0;
    2. one of weight 0 and one of weight 1/2;
    3. two of weight 1/2 whose weight comes from different cops;
    4. when every weight is 1 but for four dimensions of weight 1/2 from one
       cop, a single step in one of those four.

    Every such move ends at distance at least 3 from every cop. Weights are
    kept doubled so that they stay integers.

    Args:
        strict: Whether ending a turn within distance 2 of a cop raises

    Attributes:
        last_case (Optional[int]): The case of the list above used on the last turn
    """

    def __init__(self, strict: bool = True):
        super().__init__(strict)
        self.last_case: Optional[int] = None
        self._frame: Optional[CoordinateFrame] = None

    def _setup(self, graph, config):
        if config.cop_speed != 2 or config.robber_speed != 2:
            raise InvalidParameterError(
                "This strategy is for speed 2, got %s" % config.key()
            )
        if self._frame is None or self._frame.graph is not graph:
            frame = CoordinateFrame(graph)
            binary = all(size == 2 for size in frame.sizes)
            if not binary or graph.order != 2 ** frame.dimension:
                raise InvalidParameterError("%r is not an annotated hypercube" % graph)
            self._frame = frame
        return self._frame

    def _is_safe(self, graph, cops, v) -> bool:
        distances = graph.distance_matrix()
        return all(distances[c, v] >= SAFE_DISTANCE for c in cops)

    def place(self, graph, config, cops):
        self._setup(graph, config)
        for v in graph.vertices:
            if self._is_safe(graph, cops, v):
                return v
        raise PolicyError("No vertex is at distance 3 from every cop")

    def weights(self, graph, cops, robber):
        """Get the doubled weight of each dimension and, for weight-1/2 dimensions, the cop it came from.

        Returns:
            Tuple[List[int], Dict[int, int]]: The doubled weights, and the cop behind each dimension of weight 1/2
        """
        frame = self._frame
        distances = graph.distance_matrix()
        weights = [0] * frame.dimension
        sources: Dict[int, Set[int]] = {}
        for index, c in enumerate(cops):
            x = int(distances[c, robber])
            if x > 4:
                continue
            for i in range(frame.dimension):
                if frame[c][i] == frame[robber][i]:
                    continue
                weights[i] += 2 if x <= 2 else 1
                if x > 2:
                    sources.setdefault(i, set()).add(index)
        halves = {i: min(sources[i]) for i, w in enumerate(weights) if w == 1}
        return weights, halves

    def _choose(self, weights: List[int], halves: Dict[int, int]):
        zeros = [i for i, w in enumerate(weights) if w == 0]
        half = sorted(halves)
        if len(zeros) >= 2:
            return 1, zeros[:2]
        if zeros and half:
            return 2, [zeros[0], half[0]]
        for a in half:
            for b in half:
                if a < b and halves[a] != halves[b]:
                    return 3, [a, b]
        if len(half) == 4 and len(set(halves.values())) == 1:
            if all(w == 2 for i, w in enumerate(weights) if i not in halves):
                return 4, [half[0]]
        return None, []

    def move(self, graph, config, cops, robber):
        self.last_checks = {}
        frame = self._setup(graph, config)
        weights, halves = self.weights(graph, cops, robber)
        case, dims = self._choose(weights, halves)
        if case is None:
            raise PolicyError(
                "No pair of dimensions fits the weights %s" % [w / 2 for w in weights]
            )
        self.last_case = case
        target = robber
        for i in dims:
            target = frame.shift(target, i, 1 - 2 * frame[target][i])
        self._record(
            "safe_vertex",
            self._is_safe(graph, cops, target),
            "case %d left the robber within distance 2 of a cop" % case,
        )
        return target
