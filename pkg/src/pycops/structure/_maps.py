"""Vertex maps between graphs and the retractions used by the lower-bound arguments."""

from dataclasses import dataclass, field
from typing import Optional, Sequence, Tuple

from ..errors import InvalidParameterError, StructureError
from ..graphs import (
    Graph,
    cartesian_product,
    cartesian_product_all,
    complete,
    realizer_drops,
    sequence_realizer,
    subdivide,
)


@dataclass
class VertexMap:
    """A total map from the vertices of one graph to the vertices of another.

    For retractions the target is a subgraph of the source; ``embedding`` gives
    the source vertex that each target vertex is. When it is omitted the target
    vertices are taken to be the source vertices with the same numbers.

    Attributes:
        source: The graph mapped from
        target: The graph mapped to
        image: The target vertex of every source vertex
        embedding: The source vertex of every target vertex, or None for the identity embedding
        homomorphism: Set to True once :func:`is_homomorphism` has verified the map
    """

    source: Graph
    target: Graph
    image: Tuple[int, ...]
    embedding: Optional[Tuple[int, ...]] = None
    homomorphism: bool = field(default=False, compare=False)

    def __post_init__(self):
        self.image = tuple(int(x) for x in self.image)
        if len(self.image) != self.source.order:
            raise InvalidParameterError(
                "A map from %d vertices needs %d images, got %d"
                % (self.source.order, self.source.order, len(self.image))
            )
        if any(not 0 <= x < self.target.order for x in self.image):
            raise InvalidParameterError("Some image is not a vertex of the target")
        if self.embedding is not None:
            self.embedding = tuple(int(x) for x in self.embedding)

    def __call__(self, v: int) -> int:
        return self.image[v]

    def embedded(self, h: int) -> int:
        """Get the source vertex that target vertex ``h`` is."""
        return self.embedding[h] if self.embedding is not None else h

    def to_dict(self) -> dict:
        return {"image": list(self.image), "is_retraction": is_retraction(self)}


def identity_map(graph: Graph) -> VertexMap:
    """Get the identity map of a graph onto itself."""
    return VertexMap(graph, graph, tuple(graph.vertices))


def is_homomorphism(vertex_map: VertexMap) -> bool:
    """Check that a map sends every edge to an edge or to a single vertex.

    Graphs are reflexive, so both ends of an edge may land on the same vertex.
    A map that passes is marked with ``homomorphism = True``.
    """
    g, h, image = vertex_map.source, vertex_map.target, vertex_map.image
    ok = all(image[u] == image[v] or h.has_edge(image[u], image[v]) for u, v in g.edges())
    if ok:
        vertex_map.homomorphism = True
    return ok


def is_retraction(vertex_map: VertexMap) -> bool:
    """Check that a map is a retraction: a homomorphism onto a subgraph that fixes the subgraph.

    Raises:
        StructureError: If the target is not a subgraph of the source under its embedding
    """
    g, h = vertex_map.source, vertex_map.target
    embedding = [vertex_map.embedded(x) for x in h.vertices]
    if h.order > g.order or len(set(embedding)) != h.order or any(
        not 0 <= x < g.order for x in embedding
    ):
        raise StructureError("The target does not embed in the source")
    for a, b in h.edges():
        if not g.has_edge(embedding[a], embedding[b]):
            raise StructureError(
                "Target edge (%d, %d) is not an edge of the source" % (a, b)
            )
    if any(vertex_map.image[embedding[x]] != x for x in h.vertices):
        return False
    return is_homomorphism(vertex_map)


def complete_subdivision_retraction(n: int, s: int) -> VertexMap:
    """Get the retraction of K_n^(s) onto K_{n-1}^(s).

    The last branch vertex ``u`` and every subdivision vertex between it and the
    second-to-last branch vertex ``v`` go to ``v``. The ``i``-th vertex on the
    path from ``u`` to any other branch vertex ``w`` goes to the ``i``-th vertex
    on the path from ``v`` to ``w``. Everything else is fixed.

    Args:
        n: The order of the complete graph, at least 4
        s: The subdivision length, at least 1

    Returns:
        VertexMap: The map, with the target numbered as the induced subgraph on the kept vertices
    """
    if n < 4:
        raise InvalidParameterError("The subdivision retraction needs n >= 4, got %d" % n)
    if s < 1:
        raise InvalidParameterError("Subdivisions start at 1, got %d" % s)
    g = subdivide(complete(n), s)
    u, v = n - 1, n - 2

    def touches_u(x: int) -> bool:
        label = g.labels[x]
        return x == u or (label[0] == "subdivision" and u in label[1])

    kept = [x for x in g.vertices if not touches_u(x)]
    target = g.induced_subgraph(kept)
    position = {x: i for i, x in enumerate(kept)}
    image = []
    for x in g.vertices:
        label = g.labels[x]
        if x == u:
            y = v
        elif label[0] == "subdivision" and u in label[1]:
            (w, _), j = label[1], label[2]
            # Endpoints are stored low-high, so the u-end is the high end on both paths
            y = v if w == v else g.index_of(("subdivision", (w, v), j))
        else:
            y = x
        image.append(position[y])
    return VertexMap(g, target, tuple(image), embedding=tuple(kept))


def product_map(first: VertexMap, second: VertexMap) -> VertexMap:
    """Get the map of Cartesian products acting as ``first`` and ``second`` coordinatewise.

    Vertices are numbered as :func:`pycops.graphs.cartesian_product` numbers them.
    """
    g1, g2 = first.source, second.source
    h1, h2 = first.target, second.target
    source = cartesian_product(g1, g2)
    target = cartesian_product(h1, h2)
    image = [first(a) * h2.order + second(b) for a in g1.vertices for b in g2.vertices]
    embedding = None
    if first.embedding is not None or second.embedding is not None:
        embedding = tuple(
            first.embedded(a) * g2.order + second.embedded(b)
            for a in h1.vertices
            for b in h2.vertices
        )
    return VertexMap(source, target, tuple(image), embedding=embedding)


def realizer_retraction(sequence: Sequence[int], j: int) -> VertexMap:
    """Get the retraction of a sequence realizer onto its ``j``-th block.

    Block vertices are fixed; the apex and every other block go to the block's all-zero vertex.

    Args:
        sequence: The sequence passed to :func:`pycops.graphs.sequence_realizer`
        j: Which block, counting drops of the sequence from 1
    """
    drops = realizer_drops(sequence)
    if not 1 <= j <= len(drops):
        raise InvalidParameterError(
            "The sequence has %d blocks, block %d does not exist" % (len(drops), j)
        )
    g = sequence_realizer(sequence)
    i = drops[j - 1]
    kept = [x for x in g.vertices if isinstance(g.labels[x], tuple) and g.labels[x][0] == i]
    target = g.induced_subgraph(kept)
    position = {x: k for k, x in enumerate(kept)}
    image = [position.get(x, 0) for x in g.vertices]
    return VertexMap(g, target, tuple(image), embedding=tuple(kept))


def projection_retraction(factors: Sequence[Graph], dimension: int, fixed: Sequence[int]) -> VertexMap:
    """Get the retraction of a Cartesian product onto one factor-fibre.

    Every vertex keeps its ``dimension`` coordinate and takes ``fixed`` in the
    other coordinates, which retracts the product onto the copy of
    ``factors[dimension]`` through ``fixed``.

    Args:
        factors: The factor graphs, as passed to :func:`pycops.graphs.cartesian_product_all`
        dimension: The coordinate that varies in the fibre
        fixed: One vertex per factor; the entry at ``dimension`` is ignored
    """
    if not 0 <= dimension < len(factors) or len(fixed) != len(factors):
        raise InvalidParameterError("Need one fixed vertex per factor and a valid dimension")
    g = cartesian_product_all(factors)
    sizes = [f.order for f in factors]

    def number(coords) -> int:
        x = 0
        for c, size in zip(coords, sizes):
            x = x * size + c
        return x

    fibre = factors[dimension]
    embedding = []
    for a in fibre.vertices:
        point = list(fixed)
        point[dimension] = a
        embedding.append(number(point))
    image = []
    for x in g.vertices:
        digits = []
        for size in reversed(sizes):
            digits.append(x % size)
            x //= size
        image.append(digits[::-1][dimension])
    return VertexMap(g, fibre, tuple(image), embedding=tuple(embedding))
