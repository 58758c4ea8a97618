"""
Line-breaking bijection between rooted trees and multiset sequences,
first-repetition counts, and the c+ reduction.
"""

from .bijection import (
    tree_to_sequence,
    sequence_to_tree,
    first_repetition,
    final_singleton
)
from .counting import (
    elementary_symmetric,
    count_sequences,
    count_first_rep_above,
    first_repetition_law
)
from .enumeration import (
    iter_multiset_sequences,
    enumerate_trees,
    enumerate_forests,
    sample_sequence,
    sample_tree,
    sample_forest
)
from .reduction import (
    DISTINGUISHED_LEAF,
    star_tree_reduction,
    star_tree_preimages
)

__all__ = [
    # Bijection
    "tree_to_sequence",
    "sequence_to_tree",
    "first_repetition",
    "final_singleton",
    # Counting
    "elementary_symmetric",
    "count_sequences",
    "count_first_rep_above",
    "first_repetition_law",
    # Enumeration and sampling
    "iter_multiset_sequences",
    "enumerate_trees",
    "enumerate_forests",
    "sample_sequence",
    "sample_tree",
    "sample_forest",
    # Reduction
    "DISTINGUISHED_LEAF",
    "star_tree_reduction",
    "star_tree_preimages",
]
