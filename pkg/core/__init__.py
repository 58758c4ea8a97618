"""
Experiment orchestration: degree-sequence families and the pipeline that
runs verify suites, diameter sweeps and tail checks.
"""

from .families import (
    sub_binary,
    deg3seq,
    all_threes,
    mixed_three_four,
    binary_forest,
    DEGREE_FAMILIES,
    CHILD_FAMILIES,
    degree_family,
    child_family,
    format_params,
    ratio_variation,
    loglog_slope
)
from .experiment_pipeline import (
    GRAPH_FACTOR,
    KERNEL_FACTOR,
    MAX_LOG_RATIO,
    graph_diameter,
    ExperimentPipeline
)

__all__ = [
    # Families
    "sub_binary",
    "deg3seq",
    "all_threes",
    "mixed_three_four",
    "binary_forest",
    "DEGREE_FAMILIES",
    "CHILD_FAMILIES",
    "degree_family",
    "child_family",
    "format_params",
    "ratio_variation",
    "loglog_slope",
    # Pipeline
    "GRAPH_FACTOR",
    "KERNEL_FACTOR",
    "MAX_LOG_RATIO",
    "graph_diameter",
    "ExperimentPipeline",
]
