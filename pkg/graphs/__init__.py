"""
Distances, diameters and balls on labelled graphs and multigraphs.
"""

from .distances import (
    INFINITY,
    bfs_distances,
    radius_from,
    diameter,
    diameter_plus,
    diameter_all_pairs,
    tree_diameter,
    edge_ball,
    vertex_ball
)
from .conversions import to_networkx

__all__ = [
    "INFINITY",
    "bfs_distances",
    "radius_from",
    "diameter",
    "diameter_plus",
    "diameter_all_pairs",
    "tree_diameter",
    "edge_ball",
    "vertex_ball",
    "to_networkx",
]
