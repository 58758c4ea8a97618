"""
Exhaustive verify suites and the checker that runs them.
"""

from .base import VerifySuite, serialize, degree_sequences, kernel_degree_sequences
from .sequence_checks import CompositionSuite, GraphicalSuite, DistanceSuite
from .decomposition_checks import DecompositionSuite
from .encoding_checks import KernelCodeSuite, HomeoCodeSuite, TwoRegularSuite, PortMapSuite
from .tree_checks import LineBreakingSuite, HeightLawSuite, DominanceSuite
from .exploration_checks import ExplorationSuite, SwitchingSuite
from .sampler_checks import SamplerUniformitySuite, chi_square_pvalue, uniformity_cases
from .unified_checker import UnifiedChecker

__all__ = [
    # Base
    "VerifySuite",
    "serialize",
    "degree_sequences",
    "kernel_degree_sequences",
    # Suites
    "CompositionSuite",
    "GraphicalSuite",
    "DistanceSuite",
    "DecompositionSuite",
    "KernelCodeSuite",
    "HomeoCodeSuite",
    "TwoRegularSuite",
    "PortMapSuite",
    "LineBreakingSuite",
    "HeightLawSuite",
    "DominanceSuite",
    "ExplorationSuite",
    "SwitchingSuite",
    "SamplerUniformitySuite",
    "chi_square_pvalue",
    "uniformity_cases",
    # Runner
    "UnifiedChecker",
]
