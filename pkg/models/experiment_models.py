"""
Data models for experiment specifications, result rows and verify-suite results.
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, List, Optional


class GraphClass(Enum):
    """Target class of a graph sampler or enumerator"""
    ALL = "all"
    CONNECTED = "connected"
    NO_CYCLE_COMPONENTS = "nocycle"

    @classmethod
    def parse(cls, value: str) -> "GraphClass":
        aliases = {"no_cycle_components": cls.NO_CYCLE_COMPONENTS}
        if value in aliases:
            return aliases[value]
        return cls(value)


class SamplerKind(Enum):
    """Sampler backends; only MCMC is not exact"""
    REJECT = "reject"
    PRUFER = "prufer"
    MCMC = "mcmc"
    ENUMERATE = "enumerate"

    @property
    def exact(self) -> bool:
        return self is not SamplerKind.MCMC


@dataclass
class ExperimentSpec:
    """A degree-sequence family swept over a ladder of sizes"""
    family: str
    sizes: List[int]
    samples: int
    seed: int
    sampler: str = "reject"
    graph_class: str = "all"
    params: Dict[str, int] = field(default_factory=dict)
    xs: List[float] = field(default_factory=list)  # tail-check multipliers
    enabled: bool = True
    slope_window: Optional[List[float]] = None  # accepted [low, high] of the log-log slope
    max_ratio_variation: Optional[float] = None  # accepted spread of diam/sqrt(n) over the top sizes


@dataclass
class DiamScalingRow:
    """Mean diameter of one size in a scaling sweep"""
    family: str
    params: str
    size: int
    n: int
    samples: int
    mean_diameter: float
    stderr: float
    ratio_sqrt_n: float
    sampler: str
    exact: bool
    seed: int
    stream: int


@dataclass
class ScalingFit:
    """Log-log slope and ratio spread of one scaling sweep, judged against its windows"""
    family: str
    params: str
    ns: List[int]
    slope: float
    ratio_variation: float  # (max - min) / min of diam/sqrt(n) over the top sizes
    slope_window: Optional[List[float]] = None
    max_ratio_variation: Optional[float] = None

    @property
    def judged(self) -> bool:
        return self.slope_window is not None or self.max_ratio_variation is not None

    @property
    def within_bound(self) -> bool:
        if self.slope_window is not None:
            low, high = self.slope_window
            if not low <= self.slope <= high:
                return False
        if self.max_ratio_variation is not None:
            return self.ratio_variation <= self.max_ratio_variation
        return True


@dataclass
class KernelDiamRow:
    """Exceedance counts of the logarithmic diameter thresholds at one size"""
    family: str
    params: str
    size: int
    n: int
    kernel_edges: int
    samples: int
    connected_fraction: float
    exceed_graph: int  # samples with diam+(G) >= 1000 ln n
    exceed_kernel: int  # samples with diam+(K) >= 500 ln m
    max_ratio: float  # max over connected samples of diam+(G) / ln n
    slow_growth_fraction: float  # explorations reaching |Q| >= 11 only past radius 20
    sampler: str
    seed: int
    stream: int
    ratio_limit: float = 6.0

    @property
    def within_bound(self) -> bool:
        return self.exceed_graph == 0 and self.exceed_kernel == 0 and self.max_ratio <= self.ratio_limit


@dataclass
class TailCheckResult:
    """Empirical tail probability against its analytic bound"""
    kind: str  # "biased-height" or "forest-height"
    n: int
    m: int  # composition parts, or number of trees for forests
    x: float
    threshold: float
    empirical_tail: float
    stderr: float
    analytic_bound: float
    samples: int
    seed: int
    model_tail: Optional[float] = None  # tail of the sampled law computed from its pmf

    @property
    def within_bound(self) -> bool:
        return self.empirical_tail <= self.analytic_bound + 3 * self.stderr


@dataclass
class SuiteResult:
    """Outcome of one exhaustive verify suite"""
    name: str
    passed: bool
    instances: int
    checks: int = 0
    failures: List[Dict[str, Any]] = field(default_factory=list)
    seconds: float = 0.0
    notes: List[str] = field(default_factory=list)


@dataclass
class VerifyReport:
    """All suite results of one verify run"""
    suites: List[SuiteResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(s.passed for s in self.suites)

    @property
    def first_failure(self) -> Optional[SuiteResult]:
        return next((s for s in self.suites if not s.passed), None)


@dataclass
class ExperimentResults:
    """Everything one run of the lab produced, ready for the report generators"""
    verify: Optional[VerifyReport] = None
    diam_scaling: List[DiamScalingRow] = field(default_factory=list)
    kernel_diam: List[KernelDiamRow] = field(default_factory=list)
    tree_tail: List[TailCheckResult] = field(default_factory=list)
    slopes: Dict[str, float] = field(default_factory=dict)  # family/params -> log-log slope
    scaling_fits: List[ScalingFit] = field(default_factory=list)

    @property
    def is_empty(self) -> bool:
        return (self.verify is None and not self.diam_scaling
                and not self.kernel_diam and not self.tree_tail)

    @property
    def experiments_passed(self) -> bool:
        """Every kernel row, tail check and judged scaling fit is inside its bound"""
        return (all(row.within_bound for row in self.kernel_diam)
                and all(row.within_bound for row in self.tree_tail)
                and all(fit.within_bound for fit in self.scaling_fits))

    @property
    def passed(self) -> bool:
        return (self.verify is None or self.verify.passed) and self.experiments_passed
