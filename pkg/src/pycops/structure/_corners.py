from typing import Dict, FrozenSet, List, Optional, Tuple

from ..graphs import Graph


def _members(mask: int) -> List[int]:
    return [v for v in range(mask.bit_length()) if mask >> v & 1]


def _cornered_by(graph: Graph, v: int, within: int) -> List[int]:
    # u corners v inside `within` when N[v] ∩ within ⊆ N[u] ∩ within; such u is adjacent to v
    nv = graph.closed_row(v) & within
    return [
        u for u in _members(graph.row(v) & within) if nv & ~graph.closed_row(u) == 0
    ]


def cornering_vertices(graph: Graph, v: int) -> FrozenSet[int]:
    """Get every vertex ``u != v`` whose closed neighbourhood contains that of ``v``."""
    return frozenset(_cornered_by(graph, v, (1 << graph.order) - 1))


def is_corner(graph: Graph, v: int) -> bool:
    """Check whether ``v`` is a corner: some other vertex ``u`` has N[u] ⊇ N[v].

    Args:
        graph: The graph
        v: The vertex

    Returns:
        bool: True if ``v`` is a corner
    """
    return len(cornering_vertices(graph, v)) > 0


def corners(graph: Graph) -> FrozenSet[int]:
    """Get the set of corners of a graph."""
    return frozenset(v for v in graph.vertices if is_corner(graph, v))


def twin_classes(graph: Graph) -> List[FrozenSet[int]]:
    """Get the classes of the closed-twin relation, where ``u ~ v`` when N[u] = N[v].

    Returns:
        List[FrozenSet[int]]: The classes, ordered by their smallest vertex
    """
    by_row: Dict[int, List[int]] = {}
    for v in graph.vertices:
        by_row.setdefault(graph.closed_row(v), []).append(v)
    return sorted((frozenset(c) for c in by_row.values()), key=min)


def quotient(graph: Graph) -> Tuple[Graph, List[int]]:
    """Get the twin quotient G/Θ.

    Class ``i`` of :func:`twin_classes` becomes vertex ``i``, labelled with its
    smallest member. Two classes are adjacent when their members are.

    Returns:
        Tuple[Graph, List[int]]: The quotient and the class of every original vertex
    """
    classes = twin_classes(graph)
    class_of = [0] * graph.order
    for i, c in enumerate(classes):
        for v in c:
            class_of[v] = i
    reps = [min(c) for c in classes]
    edges = [
        (i, j)
        for i in range(len(reps))
        for j in range(i + 1, len(reps))
        if graph.has_edge(reps[i], reps[j])
    ]
    return Graph(len(reps), edges, labels=reps), class_of


def copwin_ordering(graph: Graph) -> Optional[List[int]]:
    """Find a cop-win ordering by repeatedly removing the lowest-numbered corner.

    Every vertex but the last is a corner of the subgraph induced by itself and
    the vertices after it.

    Args:
        graph: A nonempty graph

    Returns:
        Optional[List[int]]: The ordering, or None if some stage has no corner (the graph is not cop-win)
    """
    remaining = (1 << graph.order) - 1
    ordering = []
    while bin(remaining).count("1") > 1:
        corner = next(
            (v for v in _members(remaining) if _cornered_by(graph, v, remaining)), None
        )
        if corner is None:
            return None
        ordering.append(corner)
        remaining &= ~(1 << corner)
    return ordering + _members(remaining)


def is_dismantlable(graph: Graph) -> bool:
    """Check whether a graph has a cop-win ordering."""
    return copwin_ordering(graph) is not None
