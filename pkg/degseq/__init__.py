"""
Degree sequences, child sequences and compositions.
"""

from .sequences import (
    surplus,
    count_degree,
    is_graphical,
    restrict,
    count_trees_with_degrees,
    kernel_child_sequence,
    binary_child_sequence,
    extend_with_singletons,
    iter_degree_sequences,
    iter_child_sequences,
    iter_degree_sequence_types,
    iter_child_sequence_types,
    canonical_child_sequence,
    sequence_from_runs
)
from .compositions import (
    count_compositions,
    iter_compositions,
    sample_composition
)

__all__ = [
    "surplus",
    "count_degree",
    "is_graphical",
    "restrict",
    "count_trees_with_degrees",
    "kernel_child_sequence",
    "binary_child_sequence",
    "extend_with_singletons",
    "iter_degree_sequences",
    "iter_child_sequences",
    "iter_degree_sequence_types",
    "iter_child_sequence_types",
    "canonical_child_sequence",
    "sequence_from_runs",
    "count_compositions",
    "iter_compositions",
    "sample_composition",
]
