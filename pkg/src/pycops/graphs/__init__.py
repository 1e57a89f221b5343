"""Submodule that holds graphs, their metrics, file formats and every construction the game is played on."""

from ._graph import Graph, INFINITY
from ._families import (
    CAPTURE_FAMILY_BASE_EDGES,
    CAPTURE_FAMILY_BASE_LABELS,
    capture_family,
    complete,
    complete_bipartite,
    cycle,
    cycle_strong_power_product,
    grid,
    hypercube,
    path,
    petersen,
    random_connected_graph,
    random_tree,
    realizer_drops,
    sequence_realizer,
    star,
    torus,
)
from ._io import (
    iter_graph6,
    parse_edge_list,
    parse_graph6,
    read_graph,
    write_edge_list,
    write_graph,
    write_graph6,
)
from ._products import (
    cartesian_product,
    cartesian_product_all,
    power,
    strong_product,
    strong_product_all,
    subdivide,
)
from ._projective import heawood, incidence_graph_pg2
from ._renderer import GraphRenderer

__all__ = [
    "Graph",
    "GraphRenderer",
    "INFINITY",
    "CAPTURE_FAMILY_BASE_EDGES",
    "CAPTURE_FAMILY_BASE_LABELS",
    "capture_family",
    "cartesian_product",
    "cartesian_product_all",
    "complete",
    "complete_bipartite",
    "cycle",
    "cycle_strong_power_product",
    "grid",
    "heawood",
    "hypercube",
    "incidence_graph_pg2",
    "iter_graph6",
    "parse_edge_list",
    "parse_graph6",
    "path",
    "petersen",
    "power",
    "random_connected_graph",
    "random_tree",
    "read_graph",
    "realizer_drops",
    "sequence_realizer",
    "star",
    "strong_product",
    "strong_product_all",
    "subdivide",
    "torus",
    "write_edge_list",
    "write_graph",
    "write_graph6",
]
