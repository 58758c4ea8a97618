"""
Unified checker that runs the verify suites enabled in the configuration.
"""

from typing import Callable, Dict, List, Optional

from models import LabeledGraph, SimpleKernel, VerificationFailure, VerifyReport
from parsers import VerifyConfig
from .base import VerifySuite
from .decomposition_checks import DecompositionSuite
from .encoding_checks import HomeoCodeSuite, KernelCodeSuite, PortMapSuite, TwoRegularSuite
from .exploration_checks import ExplorationSuite, SwitchingSuite
from .sampler_checks import SamplerUniformitySuite
from .sequence_checks import CompositionSuite, DistanceSuite, GraphicalSuite
from .tree_checks import DominanceSuite, HeightLawSuite, LineBreakingSuite

# suites that are off unless the configuration names them
OPT_IN = {"samplers"}


class UnifiedChecker:
    """
    Runs enabled suites in a fixed order, cheapest first.

    `simple_kernel_fn` replaces the simple-kernel construction inside the
    suites that depend on it, which lets a deliberately faulty version be
    checked for detection.
    """

    def __init__(
        self,
        config: Optional[VerifyConfig] = None,
        simple_kernel_fn: Optional[Callable[[LabeledGraph], SimpleKernel]] = None,
        suites: Optional[List[VerifySuite]] = None
    ):
        self.config = config or VerifyConfig()
        self.suites = suites or [
            CompositionSuite(),
            TwoRegularSuite(),
            GraphicalSuite(),
            LineBreakingSuite(),
            HeightLawSuite(),
            DominanceSuite(),
            DistanceSuite(),
            DecompositionSuite(simple_kernel_fn=simple_kernel_fn),
            KernelCodeSuite(simple_kernel_fn=simple_kernel_fn),
            HomeoCodeSuite(),
            PortMapSuite(),
            ExplorationSuite(),
            SwitchingSuite(),
            SamplerUniformitySuite(),
        ]

    def is_enabled(self, name: str) -> bool:
        if name in OPT_IN:
            return name in self.config.suites and self.config.suites[name].enabled
        return self.config.is_enabled(name)

    @property
    def suite_names(self) -> List[str]:
        return [suite.name for suite in self.suites]

    def run(self, only: Optional[List[str]] = None, fail_fast: bool = False,
            progress: bool = True) -> VerifyReport:
        """
        Run every enabled suite (or just those in `only`).

        With fail_fast the first failing suite raises VerificationFailure
        carrying its first counterexample.
        """
        by_name: Dict[str, VerifySuite] = {suite.name: suite for suite in self.suites}
        unknown = set(only or []) - set(by_name)
        if unknown:
            raise ValueError(f"Unknown verify suite(s): {', '.join(sorted(unknown))}. "
                             f"Use any of {', '.join(self.suite_names)}")
        report = VerifyReport()
        for suite in self.suites:
            if only is not None and suite.name not in only:
                continue
            if only is None and not self.is_enabled(suite.name):
                continue
            if progress:
                print(f"  Running suite '{suite.name}'...")
            result = suite.run(self.config.suite(suite.name))
            report.suites.append(result)
            if progress:
                status = "PASS" if result.passed else "FAIL"
                print(f"    {status}: {result.instances} instances, {result.checks} checks, {result.seconds:.1f}s")
            if fail_fast and not result.passed:
                raise VerificationFailure(suite.name, result.failures[0] if result.failures else None)
        return report
