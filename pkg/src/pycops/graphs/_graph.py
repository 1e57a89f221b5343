import hashlib
from typing import Any, Dict, FrozenSet, Hashable, Iterable, List, Optional, Sequence, Tuple, Union

import networkx as nx
import numpy as np

from ..errors import InvalidParameterError

INFINITY = float("inf")
"""Distance reported between vertices in different components."""

Distance = Union[int, float]


def _bits(mask: int) -> List[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


class Graph:
    """An immutable simple graph on the vertices ``0..order-1``.

    Adjacency is held as one integer bitmask per vertex, so membership tests and
    neighbourhood intersections are single integer operations. No loops are
    stored; the reflexive convention (every vertex is in its own closed
    neighbourhood) is applied by :meth:`closed_neighborhood`.

    Args:
        order: The number of vertices
        edges: The edges, as pairs of distinct vertices
        labels: Optional annotation per vertex (names, point/line tags, subdivision positions)
        coords: Optional coordinate tuple per vertex, set by the product constructions

    Attributes:
        order (int): The number of vertices
        labels (Optional[Tuple]): The vertex annotations, if any
        coords (Optional[Tuple[Tuple[int, ...], ...]]): The coordinate tuples, if any
    """

    __slots__ = ("order", "labels", "coords", "_rows", "_edge_count", "_label_index", "_distances")

    def __init__(
        self,
        order: int,
        edges: Iterable[Tuple[int, int]] = (),
        labels: Optional[Sequence[Hashable]] = None,
        coords: Optional[Sequence[Tuple[int, ...]]] = None,
    ):
        if order < 0:
            raise InvalidParameterError("A graph cannot have %d vertices" % order)
        rows = [0] * order
        for u, v in edges:
            if not (0 <= u < order and 0 <= v < order):
                raise InvalidParameterError(
                    "Edge (%d, %d) is outside a graph of order %d" % (u, v, order)
                )
            if u == v:
                raise InvalidParameterError("Loop at %d: loops are implied, not stored" % u)
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        for name, annotation in (("labels", labels), ("coords", coords)):
            if annotation is not None and len(annotation) != order:
                raise InvalidParameterError(
                    "Got %d %s for a graph of order %d" % (len(annotation), name, order)
                )
        self.order = order
        self.labels = tuple(labels) if labels is not None else None
        self.coords = tuple(tuple(c) for c in coords) if coords is not None else None
        self._rows: Tuple[int, ...] = tuple(rows)
        self._edge_count = sum(bin(r).count("1") for r in rows) // 2
        self._label_index: Optional[Dict[Any, int]] = None
        self._distances: Optional[np.ndarray] = None

    def __len__(self) -> int:
        return self.order

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self._rows == other._rows

    def __hash__(self) -> int:
        return hash(self._rows)

    def __repr__(self) -> str:
        return "Graph(order=%d, edges=%d)" % (self.order, self._edge_count)

    @property
    def vertices(self) -> range:
        """The vertices ``0..order-1``."""
        return range(self.order)

    @property
    def edge_count(self) -> int:
        """The number of edges."""
        return self._edge_count

    def _check(self, v: int):
        if not (isinstance(v, (int, np.integer)) and 0 <= v < self.order):
            raise InvalidParameterError(
                "Vertex %s is not in a graph of order %d" % (v, self.order)
            )

    def row(self, v: int) -> int:
        """Get the open neighbourhood of ``v`` as a bitmask."""
        self._check(v)
        return self._rows[v]

    def closed_row(self, v: int) -> int:
        """Get the closed neighbourhood of ``v`` as a bitmask."""
        self._check(v)
        return self._rows[v] | (1 << v)

    def neighbors(self, v: int) -> FrozenSet[int]:
        """Get the open neighbourhood N(v).

        Args:
            v: The vertex

        Returns:
            FrozenSet[int]: The vertices adjacent to ``v``, not including ``v``
        """
        return frozenset(_bits(self.row(v)))

    def closed_neighborhood(self, v: int) -> FrozenSet[int]:
        """Get the closed neighbourhood N[v], which always contains ``v``."""
        return frozenset(_bits(self.closed_row(v)))

    def has_edge(self, u: int, v: int) -> bool:
        """Check whether ``u`` and ``v`` are adjacent. A vertex is not adjacent to itself."""
        self._check(u)
        self._check(v)
        return bool(self._rows[u] >> v & 1)

    def degree(self, v: int) -> int:
        return bin(self.row(v)).count("1")

    def degrees(self) -> List[int]:
        """Get the degree of every vertex, in vertex order."""
        return [bin(r).count("1") for r in self._rows]

    def edges(self) -> List[Tuple[int, int]]:
        """Get every edge as a pair ``(u, v)`` with ``u < v``, sorted."""
        return [(u, v) for u in range(self.order) for v in _bits(self._rows[u]) if u < v]

    def index_of(self, label: Hashable) -> int:
        """Get the vertex carrying the given label.

        Raises:
            InvalidParameterError: If the graph has no such label
        """
        if self._label_index is None:
            self._label_index = {l: i for i, l in enumerate(self.labels or ())}
        if label not in self._label_index:
            raise InvalidParameterError("No vertex is labelled %r" % (label,))
        return self._label_index[label]

    def label_of(self, v: int) -> Hashable:
        """Get the label of ``v``, or ``v`` itself for an unlabelled graph."""
        self._check(v)
        return self.labels[v] if self.labels is not None else v

    def distances_from(self, v: int) -> List[Distance]:
        """Get the breadth-first distance from ``v`` to every vertex.

        Returns:
            List: The distances, with :data:`INFINITY` for unreachable vertices
        """
        self._check(v)
        dist: List[Distance] = [INFINITY] * self.order
        seen = 1 << v
        frontier = [v]
        level = 0
        while frontier:
            nxt = []
            for u in frontier:
                dist[u] = level
            for u in frontier:
                fresh = self._rows[u] & ~seen
                seen |= fresh
                nxt.extend(_bits(fresh))
            frontier = nxt
            level += 1
        return dist

    def dist(self, u: int, v: int) -> Distance:
        """Get the distance between ``u`` and ``v``, or :data:`INFINITY` if they are disconnected."""
        self._check(v)
        return self.distances_from(u)[v]

    def ball(self, v: int, r: int) -> FrozenSet[int]:
        """Get the closed ball N_r[v] of vertices within distance ``r`` of ``v``, including ``v``."""
        if r < 0:
            raise InvalidParameterError("Radius must be nonnegative, got %d" % r)
        self._check(v)
        seen = 1 << v
        frontier = seen
        for _ in range(r):
            grown = 0
            for u in _bits(frontier):
                grown |= self._rows[u]
            frontier = grown & ~seen
            if not frontier:
                break
            seen |= frontier
        return frozenset(_bits(seen))

    def distance_matrix(self) -> np.ndarray:
        """Get all pairwise distances as an ``order x order`` integer array.

        Unreachable pairs hold ``order``, which is larger than any finite distance.
        The matrix is computed once and cached; the returned array is read-only.
        """
        if self._distances is None:
            n = self.order
            matrix = np.empty((n, n), dtype=np.int64)
            for v in range(n):
                row = np.array(self.distances_from(v), dtype=np.float64)
                row[np.isinf(row)] = n
                matrix[v] = row
            matrix.setflags(write=False)
            self._distances = matrix
        return self._distances

    def ball_matrix(self, r: int) -> np.ndarray:
        """Get the boolean matrix whose entry ``[u, v]`` is set when ``dist(u, v) <= r``."""
        if r < 0:
            raise InvalidParameterError("Radius must be nonnegative, got %d" % r)
        return self.distance_matrix() <= r

    def adjacency_matrix(self) -> np.ndarray:
        """Get the boolean adjacency matrix, with a zero diagonal."""
        return self.distance_matrix() == 1

    def eccentricity(self, v: int) -> Distance:
        return max(self.distances_from(v), default=0)

    def diameter(self) -> Distance:
        """Get the largest distance between two vertices, :data:`INFINITY` if disconnected."""
        return max((self.eccentricity(v) for v in self.vertices), default=0)

    def radius(self) -> Distance:
        """Get the smallest eccentricity, :data:`INFINITY` if disconnected."""
        return min((self.eccentricity(v) for v in self.vertices), default=0)

    def is_connected(self) -> bool:
        """Check whether the graph is connected. The empty graph counts as connected."""
        return self.order == 0 or INFINITY not in self.distances_from(0)

    def is_complete(self) -> bool:
        return self._edge_count == self.order * (self.order - 1) // 2

    def induced_subgraph(self, vertices: Iterable[int]) -> "Graph":
        """Get the subgraph induced by the given vertices.

        The kept vertices are renumbered ``0..len(vertices)-1`` in increasing
        order; annotations follow their vertices. An unlabelled graph labels the
        subgraph with the original vertex numbers.

        Args:
            vertices: The vertices to keep

        Returns:
            Graph: The induced subgraph
        """
        kept = sorted(set(vertices))
        for v in kept:
            self._check(v)
        index = {v: i for i, v in enumerate(kept)}
        edges = [
            (index[u], index[w])
            for u in kept
            for w in _bits(self._rows[u])
            if u < w and w in index
        ]
        labels = [self.label_of(v) for v in kept]
        coords = [self.coords[v] for v in kept] if self.coords is not None else None
        return Graph(len(kept), edges, labels=labels, coords=coords)

    def delete_vertex(self, v: int) -> "Graph":
        """Get the graph with ``v`` removed. See :meth:`induced_subgraph` for the renumbering."""
        self._check(v)
        return self.induced_subgraph(u for u in self.vertices if u != v)

    def digest(self) -> str:
        """Get a stable hash of the labelled graph: its order plus a SHA-256 of the sorted edge list."""
        text = ";".join("%d-%d" % e for e in self.edges())
        return "%d:%s" % (self.order, hashlib.sha256(text.encode("ascii")).hexdigest()[:32])

    def to_networkx(self) -> nx.Graph:
        """Convert to a :class:`networkx.Graph` on the same vertex numbers, carrying labels and coords as node attributes."""
        g = nx.Graph()
        for v in self.vertices:
            attrs = {}
            if self.labels is not None:
                attrs["label"] = self.labels[v]
            if self.coords is not None:
                attrs["coords"] = self.coords[v]
            g.add_node(v, **attrs)
        g.add_edges_from(self.edges())
        return g

    @staticmethod
    def from_networkx(g: nx.Graph) -> "Graph":
        """Build a graph from a networkx graph.

        Nodes are numbered in the order networkx lists them and self-loops are
        dropped. Node names become labels unless the nodes are already ``0..n-1``.
        """
        nodes = list(g.nodes)
        index = {v: i for i, v in enumerate(nodes)}
        edges = [(index[u], index[v]) for u, v in g.edges if u != v]
        labels = None if nodes == list(range(len(nodes))) else nodes
        return Graph(len(nodes), edges, labels=labels)
