"""
Pipeline orchestration for the verify suites and the Monte Carlo experiments.
"""

import math
from dataclasses import replace
from typing import Callable, Dict, List, Optional, Union

import numpy as np

from biased import forest_tail_sweep, tail_bound_check
from decompose import decomposition_report
from evaluators import UnifiedChecker
from explore import build_kernel, queue_reach, sample_uniform_augmented_core
from generators import CSVReportGenerator, JSONReportGenerator, TextReportGenerator
from graphs import diameter_all_pairs, tree_diameter
from loaders import TextDataLoader
from models import (
    DecompositionReportDict,
    DegreeSequence,
    DiamScalingRow,
    ExperimentResults,
    ExperimentSpec,
    GraphClass,
    KernelDiamRow,
    LabeledGraph,
    SamplerKind,
    ScalingFit,
    TailCheckResult,
    VerifyReport
)
from parsers import ConfigLoader, LabConfig, SamplerConfig
from sample import sample_graphs, spawn_streams
from .families import child_family, degree_family, format_params, loglog_slope, ratio_variation

GRAPH_FACTOR = 1000  # diam+(G) threshold is GRAPH_FACTOR * ln n
KERNEL_FACTOR = 500  # diam+(K) threshold is KERNEL_FACTOR * ln m
MAX_LOG_RATIO = 6.0  # accepted max of diam+(G) / ln n over connected samples
QUEUE_TARGET = 11
SLOW_RADIUS = 20

FOREST_XS = (1.0, 2.0, 4.0, 8.0)
BIASED_XS = (2.0, 3.0, 4.0)


def graph_diameter(G: LabeledGraph) -> int:
    """diam(G), by double sweep for trees and all-pairs BFS otherwise"""
    if G.num_edges == G.num_vertices - 1 and G.is_connected():
        return tree_diameter(G)
    return diameter_all_pairs(G)


class ExperimentPipeline:
    """
    Runs the verify suites and the experiment sections of a LabConfig and
    hands the collected rows to the report generators.
    """

    def __init__(
        self,
        config: Optional[LabConfig] = None,
        checker: Optional[UnifiedChecker] = None,
        data_loader: Optional[TextDataLoader] = None,
        text_report_generator: Optional[TextReportGenerator] = None,
        json_report_generator: Optional[JSONReportGenerator] = None,
        csv_report_generator: Optional[CSVReportGenerator] = None,
        simple_kernel_fn: Optional[Callable] = None,
        progress: bool = True
    ):
        self.config = config or ConfigLoader.load()
        self.checker = checker or UnifiedChecker(self.config.verify, simple_kernel_fn=simple_kernel_fn)
        self.data_loader = data_loader or TextDataLoader()
        self.text_report_generator = text_report_generator or TextReportGenerator(self.config)
        self.json_report_generator = json_report_generator or JSONReportGenerator()
        self.csv_report_generator = csv_report_generator or CSVReportGenerator()
        self.progress = progress
        self.results = ExperimentResults()

    def _log(self, message: str) -> None:
        if self.progress:
            print(message)

    def _sampler_config(self, spec: ExperimentSpec) -> SamplerConfig:
        return replace(self.config.sampler, seed=spec.seed)

    # Verify

    def run_verify_suite(self, only: Optional[List[str]] = None, fail_fast: bool = False) -> VerifyReport:
        """Every enabled exhaustive check; raises VerificationFailure on the first failure if fail_fast"""
        report = self.checker.run(only=only, fail_fast=fail_fast, progress=self.progress)
        self.results.verify = report
        return report

    # Diameter scaling

    def run_diam_scaling(self, spec: ExperimentSpec) -> List[DiamScalingRow]:
        """
        Mean diameter per size of a degree family, with the mean / sqrt(n)
        ratio and the fitted log-log slope of mean diameter against n.
        """
        kind = SamplerKind(spec.sampler)
        cfg = self._sampler_config(spec)
        params = format_params(spec.params)
        rows = []
        for stream, size in enumerate(spec.sizes):
            d = degree_family(spec.family, size, spec.params)
            graphs = sample_graphs(d, spec.samples, kind, spec.graph_class, cfg, stream=stream)
            diameters = np.array([graph_diameter(G) for G in graphs], dtype=float)
            n = d.num_vertices
            mean = float(diameters.mean())
            stderr = float(diameters.std(ddof=1) / math.sqrt(len(diameters))) if len(diameters) > 1 else 0.0
            rows.append(DiamScalingRow(
                family=spec.family,
                params=params,
                size=size,
                n=n,
                samples=spec.samples,
                mean_diameter=mean,
                stderr=stderr,
                ratio_sqrt_n=mean / math.sqrt(n),
                sampler=kind.value,
                exact=kind.exact,
                seed=spec.seed,
                stream=stream
            ))
            self._log(f"diam-scaling {spec.family}[{params}] n={n}: mean diameter {mean:.2f} +/- {stderr:.2f}")

        key = f"{spec.family}[{params}]"
        fit = ScalingFit(
            family=spec.family,
            params=params,
            ns=[r.n for r in rows],
            slope=loglog_slope([r.n for r in rows], [r.mean_diameter for r in rows]),
            ratio_variation=ratio_variation([r.ratio_sqrt_n for r in rows]),
            slope_window=spec.slope_window,
            max_ratio_variation=spec.max_ratio_variation
        )
        self.results.slopes[key] = fit.slope
        self.results.scaling_fits.append(fit)
        if fit.judged:
            verdict = "ok" if fit.within_bound else "OUT OF BOUNDS"
            self._log(f"diam-scaling {key}: slope {fit.slope:.3f}, ratio variation {fit.ratio_variation:.3f} [{verdict}]")
        self.results.diam_scaling.extend(rows)
        return rows

    # Kernel diameter

    def _kernel_sample(self, d: DegreeSequence, rng: np.random.Generator) -> Dict[str, Union[float, bool]]:
        A = sample_uniform_augmented_core(d, rng, self.config.sampler.max_rejections)
        K = build_kernel(A)
        state = queue_reach(A, min(A.kernel_vertices), QUEUE_TARGET)
        return {
            "kernel_diameter": diameter_all_pairs(K, connected_only=True),
            "slow": state is None or state.radius > SLOW_RADIUS,
        }

    def run_kernel_diam(self, spec: ExperimentSpec) -> List[KernelDiamRow]:
        """
        Exceedances of diam+(G) >= 1000 ln n and diam+(K(A)) >= 500 ln m for
        a minimum-degree-3 family, with connectivity and queue growth.
        """
        kind = SamplerKind(spec.sampler)
        cfg = self._sampler_config(spec)
        params = format_params(spec.params)
        rows = []
        for stream, size in enumerate(spec.sizes):
            d = degree_family(spec.family, size, spec.params)
            if min(d.degrees) < 3:
                raise ValueError(f"kernel diameter runs need minimum degree 3, {spec.family} has {min(d.degrees)}")
            n = d.num_vertices
            m = d.degree_sum // 2
            graphs = sample_graphs(d, spec.samples, kind, spec.graph_class, cfg, stream=stream)
            # the second half of the spawned streams is disjoint from the graph streams
            kernel_rngs = spawn_streams(spec.seed + stream, 2 * spec.samples)[spec.samples:]

            graph_limit = GRAPH_FACTOR * math.log(n)
            kernel_limit = KERNEL_FACTOR * math.log(m)
            exceed_graph = exceed_kernel = connected = slow = 0
            max_ratio = 0.0
            for G, rng in zip(graphs, kernel_rngs):
                diam = diameter_all_pairs(G, connected_only=True)
                if diam >= graph_limit:
                    exceed_graph += 1
                if math.isfinite(diam):
                    connected += 1
                    max_ratio = max(max_ratio, diam / math.log(n))
                outcome = self._kernel_sample(d, rng)
                if outcome["kernel_diameter"] >= kernel_limit:
                    exceed_kernel += 1
                if outcome["slow"]:
                    slow += 1

            rows.append(KernelDiamRow(
                family=spec.family,
                params=params,
                size=size,
                n=n,
                kernel_edges=m,
                samples=spec.samples,
                connected_fraction=connected / spec.samples,
                exceed_graph=exceed_graph,
                exceed_kernel=exceed_kernel,
                max_ratio=max_ratio,
                slow_growth_fraction=slow / spec.samples,
                sampler=kind.value,
                seed=spec.seed,
                stream=stream,
                ratio_limit=MAX_LOG_RATIO
            ))
            self._log(
                f"kernel-diam {spec.family}[{params}] n={n}: {exceed_graph} graph and "
                f"{exceed_kernel} kernel exceedances, max diam/ln n {max_ratio:.2f} "
                f"[{'ok' if rows[-1].within_bound else 'OUT OF BOUNDS'}]"
            )
        self.results.kernel_diam.extend(rows)
        return rows

    # Tree tails

    def run_tree_tail(self, spec: ExperimentSpec) -> List[TailCheckResult]:
        """
        Tail checks of tree heights against their analytic bounds.

        `binary_forest` draws uniform forests (x defaults to 1, 2, 4, 8);
        `biased_binary` draws the composition-biased height with
        params["m"] parts (x defaults to 2, 3, 4).
        """
        rows: List[TailCheckResult] = []
        for stream, size in enumerate(spec.sizes):
            rng = spawn_streams(spec.seed + stream, 1)[0]
            if spec.family == "biased_binary":
                m = spec.params.get("m", 1)
                size_rows = [
                    tail_bound_check(size, m, x, spec.samples, rng, sampler=spec.sampler, seed=spec.seed,
                                     max_rejections=self.config.sampler.max_rejections)
                    for x in spec.xs or BIASED_XS
                ]
            else:
                c = child_family(spec.family, size, spec.params)
                size_rows = forest_tail_sweep(c, spec.xs or FOREST_XS, spec.samples, rng, seed=spec.seed)
            for row in size_rows:
                self._log(
                    f"tree-tail {row.kind} n={row.n} m={row.m} x={row.x:g}: "
                    f"{row.empirical_tail:.5f} vs bound {row.analytic_bound:.5f}"
                )
            rows.extend(size_rows)
        self.results.tree_tail.extend(rows)
        return rows

    # Experiments from config

    def run_experiments(self) -> ExperimentResults:
        """Every enabled experiment section of the configuration"""
        experiments = self.config.experiments
        for spec in experiments.diam_scaling:
            if spec.enabled:
                self.run_diam_scaling(spec)
        for spec in experiments.kernel_diam:
            if spec.enabled:
                self.run_kernel_diam(spec)
        for spec in experiments.tree_tail:
            if spec.enabled:
                self.run_tree_tail(spec)
        return self.results

    # Single graphs

    def sample(self, d: DegreeSequence, samples: int, sampler: Union[SamplerKind, str] = SamplerKind.REJECT,
               graph_class: Union[GraphClass, str] = GraphClass.ALL, stream: int = 0) -> List[LabeledGraph]:
        return sample_graphs(d, samples, sampler, graph_class, self.config.sampler, stream=stream)

    def decompose(self, edge_list_path: str) -> DecompositionReportDict:
        """Decomposition report of the graph in an edge-list file"""
        return decomposition_report(self.data_loader.load_edge_list(edge_list_path))

    # Reports

    def generate_report(self, output_path: Optional[str] = None) -> str:
        """Generate a text summary of everything run so far"""
        return self.text_report_generator.generate(self.results, output_path)

    def export_results_json(self, output_path: str):
        self.json_report_generator.generate(self.results, output_path)

    def export_results_csv(self, output_prefix: str) -> List[str]:
        return self.csv_report_generator.generate(self.results, output_prefix)
