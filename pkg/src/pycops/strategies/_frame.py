from typing import Dict, Optional, Sequence, Tuple

from ..errors import InvalidParameterError
from ..graphs import Graph

Coordinates = Tuple[int, ...]


class CoordinateFrame:
    """The coordinate view of a product graph built by :mod:`pycops.graphs`.

    Each dimension either runs along a path, where offsets are plain
    differences, or around a cycle of the given modulus, where offsets are
    taken the short way round.

    Args:
        graph: A graph with coordinate tuples, all of one length
        cyclic: Whether each dimension wraps around. Defaults to no wrapping

    Attributes:
        sizes (Tuple[int, ...]): The number of values each coordinate takes
        dimension (int): The number of coordinates

    Raises:
        InvalidParameterError: If the graph has no coordinates or they are of mixed lengths
    """

    def __init__(self, graph: Graph, cyclic: Optional[Sequence[bool]] = None):
        if graph.coords is None or graph.order == 0:
            raise InvalidParameterError("%r carries no coordinates" % graph)
        self.dimension = len(graph.coords[0])
        if any(len(c) != self.dimension for c in graph.coords):
            raise InvalidParameterError("The coordinate tuples have mixed lengths")
        self.graph = graph
        self.sizes = tuple(
            max(c[i] for c in graph.coords) + 1 for i in range(self.dimension)
        )
        self.cyclic = tuple(cyclic) if cyclic is not None else (False,) * self.dimension
        self._index: Dict[Coordinates, int] = {c: v for v, c in enumerate(graph.coords)}

    def __getitem__(self, v: int) -> Coordinates:
        return self.graph.coords[v]

    def vertex(self, coords: Sequence[int]) -> int:
        """Get the vertex with the given coordinates, wrapping cyclic ones."""
        key = tuple(
            c % size if wrap else c
            for c, size, wrap in zip(coords, self.sizes, self.cyclic)
        )
        if key not in self._index:
            raise InvalidParameterError("No vertex has coordinates %s" % (key,))
        return self._index[key]

    def offset(self, a: int, b: int, dim: int) -> int:
        """Get the signed step count from ``a`` to ``b`` along dimension ``dim``."""
        delta = self[b][dim] - self[a][dim]
        if self.cyclic[dim]:
            size = self.sizes[dim]
            delta %= size
            if delta > size // 2:
                delta -= size
        return delta

    def gaps(self, a: int, b: int) -> Coordinates:
        """Get the distance in each dimension between ``a`` and ``b``."""
        return tuple(abs(self.offset(a, b, i)) for i in range(self.dimension))

    def shift(self, v: int, dim: int, delta: int) -> int:
        """Get the vertex ``delta`` steps from ``v`` along dimension ``dim``."""
        coords = list(self[v])
        coords[dim] += delta
        return self.vertex(coords)
