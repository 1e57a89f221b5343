"""Submodule for static structure: corners, twin quotients, cop-win orderings and partitions, and retractions."""

from ._corners import (
    copwin_ordering,
    cornering_vertices,
    corners,
    is_corner,
    is_dismantlable,
    quotient,
    twin_classes,
)
from ._maps import (
    VertexMap,
    complete_subdivision_retraction,
    identity_map,
    is_homomorphism,
    is_retraction,
    product_map,
    projection_retraction,
    realizer_retraction,
)
from ._partition import CopWinPartition, capture_time_via_partition, copwin_partition

__all__ = [
    "CopWinPartition",
    "VertexMap",
    "capture_time_via_partition",
    "complete_subdivision_retraction",
    "copwin_ordering",
    "copwin_partition",
    "cornering_vertices",
    "corners",
    "identity_map",
    "is_corner",
    "is_dismantlable",
    "is_homomorphism",
    "is_retraction",
    "product_map",
    "projection_retraction",
    "quotient",
    "realizer_retraction",
    "twin_classes",
]
