"""
Data models for the random graph diameter lab.
"""

from .sequence_models import (
    DegreeSequence,
    ChildSequence,
    Composition,
    MultisetSequence
)
from .graph_models import (
    Edge,
    edge_key,
    LabeledGraph,
    MultiGraph,
    RootedForest
)
from .decomposition_models import (
    CoreDecomposition,
    SimpleKernel,
    HomeoReduction,
    DiameterBoundParts
)
from .code_models import (
    KernelCodeTriple,
    HomeoCodeTriple,
    DiscreteDistribution,
    DominanceReport
)
from .core_models import (
    HalfEdge,
    CoreRecord,
    AugmentedCore,
    ExplorationState,
    TraceRow,
    SwitchObstruction,
    SwitchingCountReport,
    validate_records
)
from .experiment_models import (
    GraphClass,
    SamplerKind,
    ExperimentSpec,
    DiamScalingRow,
    ScalingFit,
    KernelDiamRow,
    TailCheckResult,
    SuiteResult,
    VerifyReport,
    ExperimentResults
)
from .errors import (
    EnumerationGuardError,
    NotApplicableError,
    InvalidAugmentedCoreError,
    InvalidSwitchError,
    RejectionCapExceeded,
    VerificationFailure
)
from .json_schemas import (
    KernelEdgeDict,
    SimpleKernelEdgeDict,
    ForestTreeDict,
    DiameterBoundDict,
    DecompositionReportDict,
    KernelCodeDict,
    HomeoCodeDict
)

__all__ = [
    # Sequences
    "DegreeSequence",
    "ChildSequence",
    "Composition",
    "MultisetSequence",
    # Graphs
    "Edge",
    "edge_key",
    "LabeledGraph",
    "MultiGraph",
    "RootedForest",
    # Decompositions
    "CoreDecomposition",
    "SimpleKernel",
    "HomeoReduction",
    "DiameterBoundParts",
    # Codes and laws
    "KernelCodeTriple",
    "HomeoCodeTriple",
    "DiscreteDistribution",
    "DominanceReport",
    # Augmented cores
    "HalfEdge",
    "CoreRecord",
    "AugmentedCore",
    "ExplorationState",
    "TraceRow",
    "SwitchObstruction",
    "SwitchingCountReport",
    "validate_records",
    # Experiments
    "GraphClass",
    "SamplerKind",
    "ExperimentSpec",
    "DiamScalingRow",
    "ScalingFit",
    "KernelDiamRow",
    "TailCheckResult",
    "SuiteResult",
    "VerifyReport",
    "ExperimentResults",
    # Errors
    "EnumerationGuardError",
    "NotApplicableError",
    "InvalidAugmentedCoreError",
    "InvalidSwitchError",
    "RejectionCapExceeded",
    "VerificationFailure",
    # JSON TypedDict schemas
    "KernelEdgeDict",
    "SimpleKernelEdgeDict",
    "ForestTreeDict",
    "DiameterBoundDict",
    "DecompositionReportDict",
    "KernelCodeDict",
    "HomeoCodeDict",
]
