"""
Composition-biased tree laws, dominance checks and tail checks.
"""

from .laws import (
    binary_height_pmf,
    biased_height_law,
    enumerated_height_law,
    max_subset_law,
    conditioned_law,
    representation_height_law
)
from .dominance import (
    check_stochastic_dominance,
    check_conditional_dominance,
    conditional_dominance_report,
    upper_conditioning_dominates,
    lower_conditioning_dominates,
    conditioning_is_monotone,
    binary_comparison_sequence,
    dominated_by_binary,
    first_repetition_dominated_by_binary,
    max_subset_dominance,
    exact_dominance_instance
)
from .sampling import (
    DEFAULT_MAX_REJECTIONS,
    sample_biased_pair,
    binary_height_probabilities,
    sample_biased_heights,
    tail_threshold,
    tail_bound,
    tail_bound_check,
    forest_tail_bound,
    forest_tail_check,
    forest_tail_sweep,
    standardized_heights,
    binary_tail_exact
)

__all__ = [
    # Exact laws
    "binary_height_pmf",
    "biased_height_law",
    "enumerated_height_law",
    "max_subset_law",
    "conditioned_law",
    "representation_height_law",
    # Dominance
    "check_stochastic_dominance",
    "check_conditional_dominance",
    "conditional_dominance_report",
    "upper_conditioning_dominates",
    "lower_conditioning_dominates",
    "conditioning_is_monotone",
    "binary_comparison_sequence",
    "dominated_by_binary",
    "first_repetition_dominated_by_binary",
    "max_subset_dominance",
    "exact_dominance_instance",
    # Sampling and tails
    "DEFAULT_MAX_REJECTIONS",
    "sample_biased_pair",
    "binary_height_probabilities",
    "sample_biased_heights",
    "tail_threshold",
    "tail_bound",
    "tail_bound_check",
    "forest_tail_bound",
    "forest_tail_check",
    "forest_tail_sweep",
    "standardized_heights",
    "binary_tail_exact",
]
