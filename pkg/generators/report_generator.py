"""
Report generators for verify suites and Monte Carlo experiments.
"""

import csv
import json
from dataclasses import asdict, fields
from typing import Any, Dict, List, Optional

from models import DiamScalingRow, ExperimentResults, KernelDiamRow, TailCheckResult
from parsers import LabConfig


class TextReportGenerator:
    """Generates human-readable text reports"""

    def __init__(self, config: Optional[LabConfig] = None):
        self.config = config

    def set_config(self, config: LabConfig):
        """Set configuration for report generation"""
        self.config = config

    def generate(self, results: ExperimentResults, output_path: Optional[str] = None) -> str:
        if results.is_empty:
            return "No results available."

        report_lines = [
            "=" * 80,
            "RANDOM GRAPH DIAMETER LAB REPORT",
            "=" * 80,
            ""
        ]
        if self.config:
            report_lines.extend([f"Sampler seed: {self.config.sampler.seed}", ""])

        if results.verify is not None:
            verify = results.verify
            report_lines.extend([
                "VERIFY SUITES",
                "-" * 40,
                f"Overall: {'PASS' if verify.passed else 'FAIL'}",
                ""
            ])
            for suite in verify.suites:
                status = "PASS" if suite.passed else "FAIL"
                report_lines.append(
                    f"  [{status}] {suite.name}: {suite.instances} instances, "
                    f"{suite.checks} checks, {suite.seconds:.1f}s"
                )
                for note in suite.notes:
                    report_lines.append(f"      {note}")
                for failure in suite.failures[:3]:
                    report_lines.append(f"      counterexample: {json.dumps(failure, default=str)}")
            report_lines.append("")

        if results.diam_scaling or results.scaling_fits:
            report_lines.extend(["DIAMETER SCALING", "-" * 40])
            for row in results.diam_scaling:
                report_lines.append(
                    f"  {row.family}({row.params}) n={row.n}: mean diam {row.mean_diameter:.2f} "
                    f"+/- {row.stderr:.2f}, mean/sqrt(n) {row.ratio_sqrt_n:.3f}"
                )
            for key, slope in results.slopes.items():
                report_lines.append(f"  log-log slope {key}: {slope:.3f}")
            for fit in results.scaling_fits:
                if fit.judged:
                    mark = "ok" if fit.within_bound else "OUT OF BOUNDS"
                    report_lines.append(
                        f"  {fit.family}({fit.params}) slope {fit.slope:.3f} in {fit.slope_window}, "
                        f"ratio variation {fit.ratio_variation:.3f} <= {fit.max_ratio_variation} [{mark}]"
                    )
            report_lines.append("")

        if results.kernel_diam:
            report_lines.extend(["KERNEL DIAMETER", "-" * 40])
            for row in results.kernel_diam:
                report_lines.append(
                    f"  {row.family}({row.params}) n={row.n}: exceed(G) {row.exceed_graph}, "
                    f"exceed(K) {row.exceed_kernel}, connected {row.connected_fraction:.1%}, "
                    f"max diam+/ln n {row.max_ratio:.2f} [{'ok' if row.within_bound else 'EXCEEDED'}]"
                )
            report_lines.append("")

        if results.tree_tail:
            report_lines.extend(["TREE HEIGHT TAILS", "-" * 40])
            for row in results.tree_tail:
                mark = "ok" if row.within_bound else "EXCEEDED"
                report_lines.append(
                    f"  {row.kind} n={row.n} m={row.m} x={row.x:g}: empirical {row.empirical_tail:.4g} "
                    f"(se {row.stderr:.2g}) vs bound {row.analytic_bound:.4g} [{mark}]"
                )
            report_lines.append("")

        report = "\n".join(report_lines)

        if output_path:
            with open(output_path, 'w') as f:
                f.write(report)
            print(f"Report saved to: {output_path}")

        return report


class JSONReportGenerator:
    """Generates JSON reports"""

    def __init__(self, config: Optional[LabConfig] = None):
        self.config = config

    def set_config(self, config: LabConfig):
        """Set configuration for report generation"""
        self.config = config

    def to_dict(self, results: ExperimentResults) -> Dict[str, Any]:
        export_data: Dict[str, Any] = {
            "summary": {
                "verify_passed": results.verify.passed if results.verify else None,
                "diam_scaling_rows": len(results.diam_scaling),
                "kernel_diam_rows": len(results.kernel_diam),
                "tree_tail_rows": len(results.tree_tail),
                "slopes": results.slopes,
                "experiments_passed": results.experiments_passed,
            },
            "verify": [asdict(s) for s in results.verify.suites] if results.verify else [],
            "diam_scaling": [asdict(r) for r in results.diam_scaling],
            "kernel_diam": [dict(asdict(r), within_bound=r.within_bound) for r in results.kernel_diam],
            "scaling_fits": [dict(asdict(f), within_bound=f.within_bound) for f in results.scaling_fits],
            "tree_tail": [dict(asdict(r), within_bound=r.within_bound) for r in results.tree_tail],
        }
        if self.config:
            export_data["summary"]["seed"] = self.config.sampler.seed
        return export_data

    def generate(self, results: ExperimentResults, output_path: str):
        """Export results as JSON for further processing"""
        with open(output_path, 'w') as f:
            json.dump(self.to_dict(results), f, indent=2, default=str)
        print(f"Results exported to: {output_path}")


class CSVReportGenerator:
    """One CSV per experiment kind; every row carries seed, sampler, family and parameters"""

    TABLES = {
        "diam_scaling": DiamScalingRow,
        "kernel_diam": KernelDiamRow,
        "tree_tail": TailCheckResult,
    }

    def write_rows(self, rows: List[Any], row_type: type, stream) -> None:
        writer = csv.DictWriter(stream, fieldnames=[f.name for f in fields(row_type)], lineterminator="\n")
        writer.writeheader()
        for row in rows:
            writer.writerow(asdict(row))

    def generate(self, results: ExperimentResults, output_prefix: str) -> List[str]:
        """Write `<prefix>_<kind>.csv` for every non-empty table and return the paths"""
        written = []
        for name, row_type in self.TABLES.items():
            rows = getattr(results, name)
            if not rows:
                continue
            path = f"{output_prefix}_{name}.csv"
            with open(path, 'w', newline='') as f:
                self.write_rows(rows, row_type, f)
            print(f"Results exported to: {path}")
            written.append(path)
        return written
