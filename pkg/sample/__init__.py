"""
Uniform samplers, exact enumerators and the degree-preserving swap chain.
"""

from .enumeration import (
    ENUMERATION_GUARD,
    in_class,
    iter_graphs,
    enumerate_graphs
)
from .configuration import sample_configuration_rejection
from .trees import (
    prufer_to_edges,
    sample_tree_prufer
)
from .mcmc import (
    havel_hakimi,
    default_burnin,
    mcmc_double_swap,
    mcmc_sample
)
from .samplers import (
    sample_augmented_pushforward,
    spawn_streams,
    sample_graphs
)

__all__ = [
    # Enumeration
    "ENUMERATION_GUARD",
    "in_class",
    "iter_graphs",
    "enumerate_graphs",
    # Exact samplers
    "sample_configuration_rejection",
    "prufer_to_edges",
    "sample_tree_prufer",
    "sample_augmented_pushforward",
    # Swap chain
    "havel_hakimi",
    "default_burnin",
    "mcmc_double_swap",
    "mcmc_sample",
    # Streams
    "spawn_streams",
    "sample_graphs",
]
