from itertools import combinations, product
from typing import List, Tuple

import numpy as np

from ._graph import Graph
from ..errors import StructureError, UnsupportedOrderError


def _is_prime(q: int) -> bool:
    return q >= 2 and all(q % p for p in range(2, int(q ** 0.5) + 1))


def _projective_points(q: int) -> List[Tuple[int, int, int]]:
    # One representative per 1-dimensional subspace: first nonzero entry is 1
    return [
        v
        for v in product(range(q), repeat=3)
        if any(v) and v[next(i for i in range(3) if v[i])] == 1
    ]


def check_plane_axioms(q: int, lines: List[frozenset], point_count: int):
    """Check that a family of lines over ``point_count`` points is a projective plane of order ``q``.

    Raises:
        StructureError: Naming the first axiom that fails
    """
    if any(len(line) != q + 1 for line in lines):
        raise StructureError("Some line does not have %d points" % (q + 1))
    for p in range(point_count):
        if sum(p in line for line in lines) != q + 1:
            raise StructureError("Point %d is not on exactly %d lines" % (p, q + 1))
    for a, b in combinations(lines, 2):
        if len(a & b) != 1:
            raise StructureError("Two lines do not meet in exactly one point")
    for a, b in combinations(range(point_count), 2):
        if sum(a in line and b in line for line in lines) != 1:
            raise StructureError("Points %d and %d do not share exactly one line" % (a, b))
    for quad in combinations(range(point_count), 4):
        if all(len(line & set(quad)) <= 2 for line in lines):
            return
    raise StructureError("No four points are in general position")


def incidence_graph_pg2(q: int) -> Graph:
    """Get the incidence graph of the projective plane of prime order ``q``.

    Points are the 1-dimensional subspaces of the 3-dimensional space over the
    integers mod ``q`` and lines are the 2-dimensional ones, each given by a
    normal vector. Points are numbered ``0..q²+q`` and labelled
    ``("point", vector)``; lines follow, labelled ``("line", normal)``. A point
    lies on a line when their dot product is 0 mod ``q``. The plane axioms are
    checked before the graph is returned.

    Args:
        q: The order of the plane, a prime

    Returns:
        Graph: The bipartite incidence graph, ``(q + 1)``-regular on ``2(q² + q + 1)`` vertices

    Raises:
        UnsupportedOrderError: If ``q`` is not prime
    """
    if not _is_prime(q):
        raise UnsupportedOrderError("Only prime orders are supported, got %d" % q)
    vectors = _projective_points(q)
    n = len(vectors)
    arr = np.array(vectors, dtype=np.int64)
    incident = (arr @ arr.T) % q == 0
    lines = [frozenset(np.flatnonzero(incident[:, j]).tolist()) for j in range(n)]
    check_plane_axioms(q, lines, n)
    edges = [(p, n + j) for j, line in enumerate(lines) for p in sorted(line)]
    labels = [("point", v) for v in vectors] + [("line", v) for v in vectors]
    return Graph(2 * n, edges, labels=labels)


def heawood() -> Graph:
    """Get the Heawood graph, the incidence graph of the Fano plane."""
    return incidence_graph_pg2(2)
