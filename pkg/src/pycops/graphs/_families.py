import random
from itertools import combinations
from typing import List, Optional, Sequence

import networkx as nx

from ._graph import Graph
from ._products import cartesian_product, cartesian_product_all, strong_product_all
from ..errors import InvalidParameterError


def _at_least(name: str, value: int, minimum: int):
    if value < minimum:
        raise InvalidParameterError(
            "%s needs a size of at least %d, got %d" % (name, minimum, value)
        )


def path(n: int) -> Graph:
    """Get the path P_n on ``n >= 1`` vertices, numbered along the path."""
    _at_least("path", n, 1)
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    """Get the cycle C_n on ``n >= 3`` vertices, numbered around the cycle."""
    _at_least("cycle", n, 3)
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    """Get the complete graph K_n on ``n >= 1`` vertices."""
    _at_least("complete", n, 1)
    return Graph(n, combinations(range(n), 2))


def star(n: int) -> Graph:
    """Get the star on ``n >= 1`` vertices: vertex 0 joined to each of the ``n - 1`` others."""
    _at_least("star", n, 1)
    return Graph(n, [(0, i) for i in range(1, n)])


def complete_bipartite(a: int, b: int) -> Graph:
    """Get K_{a,b}, with the first side numbered ``0..a-1``."""
    _at_least("complete_bipartite", a, 1)
    _at_least("complete_bipartite", b, 1)
    return Graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def hypercube(d: int) -> Graph:
    """Get the hypercube Q_d, the d-fold Cartesian product of K_2.

    Vertex ``v`` has coordinate tuple equal to the ``d`` binary digits of ``v``,
    most significant first.
    """
    _at_least("hypercube", d, 1)
    return cartesian_product_all([complete(2)] * d)


def grid(*sizes: int) -> Graph:
    """Get the Cartesian product of paths with the given numbers of vertices, coordinate-annotated."""
    if len(sizes) == 0:
        raise InvalidParameterError("A grid needs at least one dimension")
    return cartesian_product_all([path(n) for n in sizes])


def torus(n1: int, n2: int) -> Graph:
    """Get the torus C_n1 □ C_n2, coordinate-annotated."""
    return cartesian_product(cycle(n1), cycle(n2))


def petersen() -> Graph:
    """Get the Petersen graph: outer 5-cycle ``0..4``, inner pentagram ``5..9``."""
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph(10, outer + spokes + inner)


def cycle_strong_power_product(k: int, s: int) -> Graph:
    """Get the k-fold strong product of C_{2s+2}.

    Two distinct vertices are adjacent when their coordinates differ by at most
    1 modulo ``2s + 2`` everywhere. For ``s = 1`` the factor is C_4.

    Args:
        k: The number of factors, at least 1
        s: The speed the product is built for, at least 1
    """
    _at_least("cycle_strong_power_product", k, 1)
    _at_least("cycle_strong_power_product", s, 1)
    return strong_product_all([cycle(2 * s + 2)] * k)


def sequence_realizer(sequence: Sequence[int]) -> Graph:
    """Build a graph whose speed-(s, s) cop number is the ``s``-th term of a sequence.

    For each index ``i`` where the sequence drops (``t_i > t_{i+1}``, with terms
    past the end counting as 1) a block H_i is added: the ``(t_i - 1)``-fold
    strong product of C_{2i+2}. One apex vertex, numbered 0, is joined to the
    all-zero vertex of every block. Block vertices are labelled
    ``(i, coordinates)`` and the apex is labelled ``"apex"``.

    Args:
        sequence: A nonincreasing sequence of positive integers ending in 1

    Returns:
        Graph: The realizer

    Raises:
        InvalidParameterError: If the sequence is empty, increases anywhere or does not end in 1
    """
    terms = list(sequence)
    if len(terms) == 0 or terms[-1] != 1:
        raise InvalidParameterError("The sequence must end in 1, got %s" % terms)
    for i in range(len(terms) - 1):
        if terms[i] < terms[i + 1]:
            raise InvalidParameterError(
                "The sequence increases at position %d: %s" % (i + 1, terms)
            )
    if min(terms) < 1:
        raise InvalidParameterError("Terms must be positive, got %s" % terms)
    labels: List = ["apex"]
    edges = []
    for i in realizer_drops(terms):
        block = cycle_strong_power_product(terms[i - 1] - 1, i)
        offset = len(labels)
        labels.extend((i, c) for c in block.coords)
        edges.extend((offset + u, offset + v) for u, v in block.edges())
        edges.append((0, offset))
    return Graph(len(labels), edges, labels=labels)


def realizer_drops(sequence: Sequence[int]) -> List[int]:
    """Get the 1-based indices ``i`` at which ``t_i > t_{i+1}`` (terms past the end count as 1)."""
    terms = list(sequence) + [1]
    return [i + 1 for i in range(len(terms) - 1) if terms[i] > terms[i + 1]]


CAPTURE_FAMILY_BASE_LABELS = ("q", "t", "w", "x", "y", "h1", "h2", "v8", "v9")
"""The vertex names of G_9, in vertex order."""

CAPTURE_FAMILY_BASE_EDGES = (
    ("q", "h1"),
    ("q", "x"),
    ("q", "w"),
    ("h1", "t"),
    ("h1", "v9"),
    ("t", "x"),
    ("t", "v8"),
    ("x", "y"),
    ("y", "w"),
    ("y", "v8"),
    ("v8", "v9"),
    ("v8", "h2"),
    ("h2", "w"),
)
"""The 13 edges of G_9."""


def capture_family(n: int) -> Graph:
    """Get G_n, the graph whose square has speed-2 capture time ``n - 7``.

    G_9 is fixed by :data:`CAPTURE_FAMILY_BASE_EDGES`. Each later vertex
    ``v_m`` (labelled ``"v<m>"``) is joined to ``v_{m-1}`` and to ``h1`` if ``m``
    is odd, ``h2`` if ``m`` is even. Vertex ``v_m`` is numbered ``m - 1``.

    Raises:
        InvalidParameterError: If ``n < 9``
    """
    _at_least("capture_family", n, 9)
    labels = list(CAPTURE_FAMILY_BASE_LABELS)
    index = {name: i for i, name in enumerate(labels)}
    edges = [(index[a], index[b]) for a, b in CAPTURE_FAMILY_BASE_EDGES]
    for m in range(10, n + 1):
        labels.append("v%d" % m)
        v = len(labels) - 1
        edges.append((v - 1, v))
        edges.append((v, index["h1" if m % 2 else "h2"]))
    return Graph(n, edges, labels=labels)


def random_connected_graph(n: int, p: float = 0.4, seed: Optional[int] = None) -> Graph:
    """Draw a connected G(n, p) random graph, redrawing until connected.

    Args:
        n: The number of vertices, at least 1
        p: The edge probability, in (0, 1]
        seed: Seed for reproducible draws
    """
    _at_least("random_connected_graph", n, 1)
    if not 0 < p <= 1:
        raise InvalidParameterError("Edge probability must be in (0, 1], got %s" % p)
    rng = random.Random(seed)
    while True:
        g = nx.gnp_random_graph(n, p, seed=rng.randrange(2 ** 32))
        if nx.is_connected(g):
            return Graph(n, g.edges)


def random_tree(n: int, seed: Optional[int] = None) -> Graph:
    """Draw a uniformly random labelled tree on ``n`` vertices from a random Prüfer sequence."""
    _at_least("random_tree", n, 1)
    if n <= 2:
        return path(n)
    rng = random.Random(seed)
    tree = nx.from_prufer_sequence([rng.randrange(n) for _ in range(n - 2)])
    return Graph(n, tree.edges)

