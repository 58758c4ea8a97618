"""
Augmented cores, path switching and the breadth-first kernel exploration.
"""

from .augmented import (
    DEFAULT_MAX_REJECTIONS,
    build_core,
    build_kernel,
    check_core_degrees,
    sample_uniform_augmented_core
)
from .exploration import (
    StatePredicate,
    initial_state,
    next_half_edge,
    bf_explore_step,
    state_at,
    trace_row,
    explore_until,
    queue_reach,
    explored_vertices
)
from .switching import (
    OrientedEdge,
    reverse,
    orientations,
    oriented_edges,
    switch,
    is_valid_pair,
    reversal,
    equivalent,
    switch_obstruction,
    free_pair_violations,
    has_adjacent_ends
)
from .counting import EVENTS, switching_count_check

__all__ = [
    # Augmented cores
    "DEFAULT_MAX_REJECTIONS",
    "build_core",
    "build_kernel",
    "check_core_degrees",
    "sample_uniform_augmented_core",
    # Exploration
    "StatePredicate",
    "initial_state",
    "next_half_edge",
    "bf_explore_step",
    "state_at",
    "trace_row",
    "explore_until",
    "queue_reach",
    "explored_vertices",
    # Switching
    "OrientedEdge",
    "reverse",
    "orientations",
    "oriented_edges",
    "switch",
    "is_valid_pair",
    "reversal",
    "equivalent",
    "switch_obstruction",
    "free_pair_violations",
    "has_adjacent_ends",
    # Double counting
    "EVENTS",
    "switching_count_check",
]
