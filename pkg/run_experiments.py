#!/usr/bin/env python3
"""
Random Graph Diameter Lab Runner

Modes:

1. verify: run the exhaustive small-instance checks enabled in config.yaml
   (or only the suites named with --suite). Any failure exits with status 1
   after printing its counterexample.

2. diam-scaling / kernel-diam / tree-tail: Monte Carlo experiments. Without
   --family the specs in the `experiments` section of config.yaml run;
   with --family a single spec is built from the command line. Any row or
   scaling fit outside its accepted bound exits with status 1.

3. sample: draw graphs with a given degree sequence and print edge lists.

4. decompose: print the core / kernel / simple-kernel report of an edge list.

CSV goes to stdout, or to <out>_<kind>.csv files with --out.
"""

import json
import os
import sys
from dataclasses import replace
from pathlib import Path
from typing import Dict, List, Optional

# Add current directory to path for imports
sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

# Load environment variables from .env file if it exists
try:
    from dotenv import load_dotenv
    env_path = os.path.join(os.path.dirname(os.path.abspath(__file__)), '.env')
    load_dotenv(env_path)
except ImportError:
    # dotenv is optional - if not installed, just use system environment variables
    pass

from core import ExperimentPipeline
from generators import CSVReportGenerator
from loaders import TextDataLoader
from models import ExperimentSpec, LabeledGraph
from parsers import ConfigLoader, LabConfig

EXPERIMENT_MODES = {
    "diam-scaling": ("diam_scaling", "run_diam_scaling"),
    "kernel-diam": ("kernel_diam", "run_kernel_diam"),
    "tree-tail": ("tree_tail", "run_tree_tail"),
}

DEFAULT_SAMPLERS = {"diam-scaling": "prufer", "kernel-diam": "reject", "tree-tail": "exact"}


def load_config(config_path: Optional[str], seed: Optional[int]) -> LabConfig:
    """config.yaml (or LAB_CONFIG), with the sampler seed from --seed or LAB_SEED"""
    config = ConfigLoader.load(config_path or os.getenv("LAB_CONFIG"))
    if seed is None and os.getenv("LAB_SEED"):
        seed = int(os.getenv("LAB_SEED"))
    if seed is not None:
        config.sampler = replace(config.sampler, seed=seed)
    return config


def parse_params(pairs: Optional[List[str]]) -> Dict[str, int]:
    params = {}
    for pair in pairs or []:
        key, sep, value = pair.partition("=")
        if not sep:
            raise ValueError(f"--param expects key=value, got {pair!r}")
        params[key.strip()] = int(value)
    return params


def ensure_output_dir(path: str) -> Path:
    output_dir = Path(path)
    output_dir.mkdir(parents=True, exist_ok=True)
    return output_dir


def print_config_summary(config: LabConfig):
    """Print a summary of the loaded configuration"""
    print("\nConfiguration Summary:")
    print("-" * 60)
    sampler = config.sampler
    print(f"Seed: {sampler.seed}  max rejections: {sampler.max_rejections}  "
          f"mcmc burn-in: {sampler.mcmc_burnin or 'auto'}  thin: {sampler.mcmc_thin}")
    enabled = [name for name, suite in config.verify.suites.items() if suite.enabled]
    print(f"Verify suites configured: {', '.join(enabled) if enabled else 'defaults'}")
    experiments = config.experiments
    print(f"Experiments: {len(experiments.diam_scaling)} diam-scaling, "
          f"{len(experiments.kernel_diam)} kernel-diam, {len(experiments.tree_tail)} tree-tail")
    print(f"Report: {config.report.output_format} -> {config.report.output_dir}/")
    print("-" * 60)


def run_verify(pipeline: ExperimentPipeline, suites: Optional[List[str]], fail_fast: bool) -> bool:
    print("=" * 60)
    print("Running VERIFY suites")
    print("=" * 60)
    report = pipeline.run_verify_suite(only=suites, fail_fast=fail_fast)
    print("=" * 60)
    for result in report.suites:
        print(f"{'PASS' if result.passed else 'FAIL'}  {result.name}: "
              f"{result.instances} instances, {result.checks} checks")
    failure = report.first_failure
    if failure is not None:
        print(f"\nFirst counterexample in suite '{failure.name}':")
        print(json.dumps(failure.failures[0] if failure.failures else {}, indent=2, default=str))
    return report.passed


def run_experiment(pipeline: ExperimentPipeline, mode: str, spec: Optional[ExperimentSpec],
                   seed: Optional[int]):
    section, method = EXPERIMENT_MODES[mode]
    specs = [spec] if spec is not None else [s for s in getattr(pipeline.config.experiments, section) if s.enabled]
    if not specs:
        print(f"No enabled '{section}' experiments in the configuration; pass --family to run one.")
        return
    if pipeline.progress:
        print("=" * 60)
        print(f"Running {mode.upper()} ({len(specs)} spec{'s' if len(specs) != 1 else ''})")
        print("=" * 60)
    for s in specs:
        if seed is not None:
            s = replace(s, seed=seed)
        getattr(pipeline, method)(s)


def emit_csv(pipeline: ExperimentPipeline, out: Optional[str]):
    if out:
        pipeline.export_results_csv(out)
        return
    generator = CSVReportGenerator()
    for name, row_type in generator.TABLES.items():
        rows = getattr(pipeline.results, name)
        if rows:
            generator.write_rows(rows, row_type, sys.stdout)


def save_reports(pipeline: ExperimentPipeline):
    """Text and JSON reports as configured"""
    report_config = pipeline.config.report
    output_dir = ensure_output_dir(report_config.output_dir)
    if report_config.output_format in ("text", "both"):
        report_path = output_dir / "lab_report.txt"
        pipeline.generate_report(str(report_path))
        print(f"Report saved to: {report_path}")
    if report_config.output_format in ("json", "both"):
        pipeline.export_results_json(str(output_dir / "lab_results.json"))


def format_edge_list(G: LabeledGraph) -> str:
    return "\n".join(f"{u} {v}" for u, v in G.sorted_edges)


def run_sample(pipeline: ExperimentPipeline, degrees: str, samples: int, sampler: str,
               graph_class: str, out: Optional[str]):
    d = TextDataLoader().parse_degree_sequence(degrees)
    graphs = pipeline.sample(d, samples, sampler, graph_class)
    text = "\n\n".join(format_edge_list(G) for G in graphs) + "\n"
    if out:
        with open(out, 'w') as f:
            f.write(text)
        print(f"{len(graphs)} graph(s) saved to: {out}")
    else:
        sys.stdout.write(text)


def run_decompose(pipeline: ExperimentPipeline, graph_path: str, out: Optional[str]):
    report = pipeline.decompose(graph_path)
    text = json.dumps(report, indent=2, default=str)
    if out:
        with open(out, 'w') as f:
            f.write(text)
        print(f"Report saved to: {out}")
    else:
        print(text)


if __name__ == "__main__":
    import argparse

    parser = argparse.ArgumentParser(
        description="Random graphs with given degree sequences: verify suites and diameter experiments",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  # Run every enabled verify suite
  python run_experiments.py --mode verify

  # Run two suites, stopping at the first failure
  python run_experiments.py --mode verify --suite decomposition --suite kernel_codes --fail-fast

  # Diameter scaling of sub-binary trees, CSV to results/sub_binary_*.csv
  python run_experiments.py --mode diam-scaling --family sub_binary --sizes 12 48 192 768 \\
      --samples 500 --param k=1 --out results/sub_binary

  # Kernel diameter experiments from config.yaml
  python run_experiments.py --mode kernel-diam

  # Uniform forest height tails
  python run_experiments.py --mode tree-tail --family binary_forest --sizes 4096 --param roots=2

  # Five uniform connected graphs with degrees 3,3,2,2,2
  python run_experiments.py --mode sample --degrees "3^2 2^3" --class connected --samples 5

  # Decompose a graph given as an edge list
  python run_experiments.py --mode decompose --graph graph.txt
        """
    )
    parser.add_argument(
        "--mode",
        choices=["verify", "diam-scaling", "kernel-diam", "tree-tail", "sample", "decompose"],
        default="verify",
        help="What to run (default: verify)"
    )
    parser.add_argument("--config", help="Path to custom config file (default: config.yaml or LAB_CONFIG)")
    parser.add_argument("--seed", type=int, help="Seed override (default: config, or LAB_SEED)")
    parser.add_argument("--out", "-o", help="Output prefix for CSV, or output file for sample/decompose")
    parser.add_argument("--suite", action="append", help="Verify suite to run; repeatable")
    parser.add_argument("--fail-fast", action="store_true", help="Stop verify at the first failing suite")
    parser.add_argument("--family", help="Family for a single experiment spec, e.g. sub_binary, all_threes")
    parser.add_argument("--sizes", type=int, nargs="+", help="Size ladder for --family")
    parser.add_argument("--param", action="append", help="Family parameter key=value; repeatable")
    parser.add_argument("--xs", type=float, nargs="+", help="Tail multipliers for tree-tail")
    parser.add_argument("--samples", "-n", type=int, default=100, help="Samples per size (default: 100)")
    parser.add_argument("--sampler", help="reject, prufer, mcmc, enumerate; exact or rejection for tree-tail")
    parser.add_argument("--class", dest="graph_class", default="all",
                        choices=["all", "connected", "nocycle", "no_cycle_components"],
                        help="Graph class to sample (default: all)")
    parser.add_argument("--degrees", "-d", help="Degree sequence for sample mode, e.g. '3 3 2 2 2' or '3^4'")
    parser.add_argument("--graph", "-g", help="Edge-list file for decompose mode")
    parser.add_argument("--report", action="store_true", help="Also save the text/JSON reports from config")

    args = parser.parse_args()

    try:
        config = load_config(args.config, args.seed)
        # keep stdout clean when it carries CSV, edge lists or JSON
        quiet = args.out is None and args.mode != "verify"
        pipeline = ExperimentPipeline(config=config, progress=not quiet)

        if args.mode == "verify":
            print_config_summary(config)
            passed = run_verify(pipeline, args.suite, args.fail_fast)
            if args.report:
                save_reports(pipeline)
            if not passed:
                sys.exit(1)
        elif args.mode in EXPERIMENT_MODES:
            spec = None
            if args.family:
                if not args.sizes:
                    parser.error("--family needs --sizes")
                spec = ExperimentSpec(
                    family=args.family,
                    sizes=args.sizes,
                    samples=args.samples,
                    seed=config.sampler.seed,
                    sampler=args.sampler or DEFAULT_SAMPLERS[args.mode],
                    graph_class=args.graph_class,
                    params=parse_params(args.param),
                    xs=args.xs or []
                )
            run_experiment(pipeline, args.mode, spec, args.seed)
            emit_csv(pipeline, args.out)
            if args.report:
                save_reports(pipeline)
            if not pipeline.results.experiments_passed:
                print("Experiment outside its accepted bounds; see the verdict marks in the report.", file=sys.stderr)
                sys.exit(1)
        elif args.mode == "sample":
            if not args.degrees:
                parser.error("sample mode needs --degrees")
            run_sample(pipeline, args.degrees, args.samples, args.sampler or "reject", args.graph_class, args.out)
        elif args.mode == "decompose":
            if not args.graph:
                parser.error("decompose mode needs --graph")
            run_decompose(pipeline, args.graph, args.out)
    except KeyboardInterrupt:
        print("\n\nRun interrupted by user.")
        sys.exit(1)
    except Exception as e:
        print(f"\n\nError during run: {e}")
        import traceback
        traceback.print_exc()
        sys.exit(1)
