from functools import reduce
from itertools import product
from typing import List, Sequence, Tuple

from ._graph import Graph, INFINITY
from ..errors import InvalidParameterError


def _coords_of(g: Graph, v: int) -> Tuple[int, ...]:
    return g.coords[v] if g.coords is not None else (v,)


def _product(g: Graph, h: Graph, strong: bool) -> Graph:
    if g.order == 0 or h.order == 0:
        raise InvalidParameterError("Both factors of a product must be nonempty")
    m = h.order
    edges = []
    # Vertex (a, b) is numbered a * |H| + b
    for a, b in product(g.vertices, h.vertices):
        u = a * m + b
        for a2 in g.closed_neighborhood(a):
            for b2 in h.closed_neighborhood(b):
                v = a2 * m + b2
                if v <= u:
                    continue
                if strong or a2 == a or b2 == b:
                    edges.append((u, v))
    coords = [_coords_of(g, a) + _coords_of(h, b) for a, b in product(g.vertices, h.vertices)]
    return Graph(g.order * m, edges, coords=coords)


def cartesian_product(g: Graph, h: Graph) -> Graph:
    """Get the Cartesian product G □ H.

    Vertex ``(a, b)`` gets the number ``a * h.order + b``. Its coordinate tuple
    is the coordinate tuple of ``a`` in ``g`` (or ``(a,)`` if ``g`` has none)
    followed by that of ``b`` in ``h``, so products of products keep flat
    coordinates.

    Args:
        g: The first factor
        h: The second factor

    Returns:
        Graph: The product, adjacent when equal in one coordinate and adjacent in the other

    Raises:
        InvalidParameterError: If either factor is empty
    """
    return _product(g, h, strong=False)


def strong_product(g: Graph, h: Graph) -> Graph:
    """Get the strong product G ⊠ H, numbered and annotated as in :func:`cartesian_product`.

    Two distinct vertices are adjacent when they are equal or adjacent in each coordinate.
    """
    return _product(g, h, strong=True)


def cartesian_product_all(factors: Sequence[Graph]) -> Graph:
    """Get the Cartesian product of one or more factors, folded left to right."""
    if len(factors) == 0:
        raise InvalidParameterError("A product needs at least one factor")
    if len(factors) == 1:
        f = factors[0]
        return Graph(f.order, f.edges(), coords=[_coords_of(f, v) for v in f.vertices])
    return reduce(cartesian_product, factors)


def strong_product_all(factors: Sequence[Graph]) -> Graph:
    """Get the strong product of one or more factors, folded left to right."""
    if len(factors) == 0:
        raise InvalidParameterError("A product needs at least one factor")
    if len(factors) == 1:
        f = factors[0]
        return Graph(f.order, f.edges(), coords=[_coords_of(f, v) for v in f.vertices])
    return reduce(strong_product, factors)


def power(g: Graph, s: int) -> Graph:
    """Get the ``s``-th power of a graph.

    Args:
        g: The graph
        s: The power, at least 1

    Returns:
        Graph: The graph on the same vertices with ``uv`` an edge whenever ``1 <= dist(u, v) <= s``.
        Annotations are kept.

    Raises:
        InvalidParameterError: If ``s < 1``
    """
    if s < 1:
        raise InvalidParameterError("Graph powers start at 1, got %d" % s)
    edges = []
    for u in g.vertices:
        for v, d in enumerate(g.distances_from(u)):
            if u < v and d != INFINITY and d <= s:
                edges.append((u, v))
    return Graph(g.order, edges, labels=g.labels, coords=g.coords)


def subdivide(g: Graph, s: int) -> Graph:
    """Get the subdivision G^(s), replacing every edge with a path of length ``s``.

    Branch vertices keep their numbers and are labelled ``("branch", v)``. The
    ``s - 1`` new vertices on edge ``(u, v)``, ``u < v``, follow in edge order and
    are labelled ``("subdivision", (u, v), j)`` where ``j`` counts steps from ``u``.

    Raises:
        InvalidParameterError: If ``s < 1``
    """
    if s < 1:
        raise InvalidParameterError("Subdivisions start at 1, got %d" % s)
    labels: List = [("branch", v) for v in g.vertices]
    edges = []
    for u, v in g.edges():
        chain = [u]
        for j in range(1, s):
            chain.append(len(labels))
            labels.append(("subdivision", (u, v), j))
        chain.append(v)
        edges.extend(zip(chain, chain[1:]))
    return Graph(len(labels), edges, labels=labels)
