import logging
from dataclasses import dataclass
from typing import FrozenSet, Optional, Tuple

from ._corners import corners, quotient
from ..errors import DomainError
from ..graphs import Graph

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CopWinPartition:
    """The layers of a cop-win graph, peeled off as corners of successive twin quotients.

    Attributes:
        layers: The vertex sets X_1, ..., X_k, disjoint and covering the graph
        last_layers_fully_adjacent: Whether every vertex of X_k is adjacent to every vertex of X_{k-1}
    """

    layers: Tuple[FrozenSet[int], ...]
    last_layers_fully_adjacent: bool

    @property
    def capture_time(self) -> int:
        """The classic capture time the partition implies: ``k - 1`` when the last two layers are fully adjacent, else ``k``."""
        k = len(self.layers)
        return k - 1 if self.last_layers_fully_adjacent else k

    def to_dict(self) -> dict:
        return {
            "layers": [sorted(layer) for layer in self.layers],
            "capture_time": self.capture_time,
        }


def copwin_partition(graph: Graph) -> Optional[CopWinPartition]:
    """Get the cop-win partition of a connected graph that is not complete.

    At each stage the corners of the twin quotient of the remaining graph are
    found, and every vertex in a corner class forms the next layer. Once the
    remaining graph is complete it forms the last layer.

    Args:
        graph: A connected, non-complete graph

    Returns:
        Optional[CopWinPartition]: The partition, or None if some stage has no corner

    Raises:
        DomainError: If the graph is complete or disconnected
    """
    if graph.is_complete():
        raise DomainError(
            "Complete graphs have no cop-win partition; use capture_time_via_partition"
        )
    if not graph.is_connected():
        raise DomainError("Cop-win partitions need a connected graph")
    remaining = list(graph.vertices)
    layers = []
    while True:
        stage = graph.induced_subgraph(remaining)
        if stage.is_complete():
            layers.append(frozenset(remaining))
            break
        q, class_of = quotient(stage)
        corner_classes = corners(q)
        if len(corner_classes) == 0:
            logger.debug("Stage %d of %r has no corners", len(layers) + 1, graph)
            return None
        layer = frozenset(remaining[i] for i in stage.vertices if class_of[i] in corner_classes)
        layers.append(layer)
        remaining = [v for v in remaining if v not in layer]
    fully_adjacent = len(layers) >= 2 and all(
        graph.has_edge(u, v) for u in layers[-1] for v in layers[-2]
    )
    return CopWinPartition(tuple(layers), fully_adjacent)


def capture_time_via_partition(graph: Graph) -> int:
    """Get the classic one-cop capture time of a cop-win graph from its cop-win partition.

    A single vertex takes 0 rounds and any other complete graph takes 1.

    Args:
        graph: A connected cop-win graph

    Returns:
        int: The capture time

    Raises:
        DomainError: If the graph is not cop-win or not connected
    """
    if graph.order == 1:
        return 0
    if graph.is_complete():
        return 1
    partition = copwin_partition(graph)
    if partition is None:
        raise DomainError("%r is not cop-win" % graph)
    return partition.capture_time
