from __future__ import annotations

import csv
import json

import pytest

from generators import CSVReportGenerator, JSONReportGenerator, TextReportGenerator
from models import (
    DiamScalingRow,
    ExperimentResults,
    KernelDiamRow,
    ScalingFit,
    SuiteResult,
    TailCheckResult,
    VerifyReport
)
from parsers import ConfigLoader


@pytest.fixture
def results() -> ExperimentResults:
    return ExperimentResults(
        verify=VerifyReport(suites=[
            SuiteResult(name="compositions", passed=True, instances=10, checks=20),
            SuiteResult(name="kernel_codes", passed=False, instances=3, checks=3,
                        failures=[{"degrees": [3, 2, 2, 2, 1], "check": "simple-kernel-splice"}]),
        ]),
        diam_scaling=[
            DiamScalingRow(family="sub_binary", params="k=1", size=16, n=50, samples=10,
                           mean_diameter=12.5, stderr=0.4, ratio_sqrt_n=1.77, sampler="prufer",
                           exact=True, seed=1, stream=0),
        ],
        tree_tail=[
            TailCheckResult(kind="biased-height", n=64, m=1, x=2.0, threshold=32.0, empirical_tail=0.01,
                            stderr=0.001, analytic_bound=0.5, samples=100, seed=8),
        ],
        slopes={"sub_binary(k=1)": 0.51},
    )


def test_text_report_sections(results, tmp_path):
    config = ConfigLoader.from_dict({"sampler": {"seed": 42}})
    out = tmp_path / "report.txt"
    report = TextReportGenerator(config).generate(results, str(out))
    assert "Sampler seed: 42" in report
    assert "Overall: FAIL" in report
    assert "[FAIL] kernel_codes" in report
    assert "simple-kernel-splice" in report
    assert "sub_binary(k=1) n=50" in report
    assert "log-log slope sub_binary(k=1): 0.510" in report
    assert "[ok]" in report
    assert "KERNEL DIAMETER" not in report
    assert out.read_text() == report


def test_text_report_of_nothing():
    assert TextReportGenerator().generate(ExperimentResults()) == "No results available."


def test_json_report(results, tmp_path):
    out = tmp_path / "results.json"
    JSONReportGenerator().generate(results, str(out))
    data = json.loads(out.read_text())
    assert data["summary"]["verify_passed"] is False
    assert data["summary"]["diam_scaling_rows"] == 1
    assert data["summary"]["kernel_diam_rows"] == 0
    assert [s["name"] for s in data["verify"]] == ["compositions", "kernel_codes"]
    assert data["tree_tail"][0]["within_bound"] is True
    assert data["diam_scaling"][0]["seed"] == 1


def test_json_report_records_seed():
    generator = JSONReportGenerator()
    generator.set_config(ConfigLoader.from_dict({"sampler": {"seed": 9}}))
    assert generator.to_dict(ExperimentResults())["summary"]["seed"] == 9


def test_csv_report_writes_non_empty_tables(results, tmp_path):
    prefix = str(tmp_path / "run")
    written = CSVReportGenerator().generate(results, prefix)
    assert written == [f"{prefix}_diam_scaling.csv", f"{prefix}_tree_tail.csv"]
    with open(written[0], newline="") as f:
        rows = list(csv.DictReader(f))
    assert rows[0]["family"] == "sub_binary"
    assert rows[0]["seed"] == "1"
    assert rows[0]["sampler"] == "prufer"


def test_reports_mark_experiment_verdicts(tmp_path):
    results = ExperimentResults(
        kernel_diam=[
            KernelDiamRow(family="all_threes", params="", size=200, n=200, kernel_edges=300, samples=20,
                          connected_fraction=1.0, exceed_graph=0, exceed_kernel=0, max_ratio=7.1,
                          slow_growth_fraction=0.0, sampler="reject", seed=5, stream=0),
        ],
        scaling_fits=[
            ScalingFit(family="sub_binary", params="k=1", ns=[50, 194, 770, 3074], slope=0.567,
                       ratio_variation=0.126, slope_window=[0.4, 0.6], max_ratio_variation=0.25),
        ],
    )
    text = TextReportGenerator().generate(results)
    assert "max diam+/ln n 7.10 [EXCEEDED]" in text
    assert "sub_binary(k=1) slope 0.567" in text
    assert "[ok]" in text

    data = JSONReportGenerator().to_dict(results)
    assert data["summary"]["experiments_passed"] is False
    assert data["kernel_diam"][0]["within_bound"] is False
    assert data["scaling_fits"][0]["within_bound"] is True
