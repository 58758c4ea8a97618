from __future__ import annotations

import pytest

from models import ExperimentSpec
from parsers import ConfigLoader, SamplerConfig, SuiteConfig, VerifyConfig


def test_missing_file_gives_defaults(tmp_path):
    config = ConfigLoader.load(str(tmp_path / "absent.yaml"))
    assert config.sampler == SamplerConfig()
    assert config.verify.is_enabled("kernel_codes")
    assert config.experiments.diam_scaling == []
    assert config.report.output_format == "both"
    assert config.report.output_dir == "results"


def test_load_yaml(tmp_path):
    path = tmp_path / "config.yaml"
    path.write_text(
        "sampler:\n"
        "  seed: 3\n"
        "  mcmc_burnin: 40\n"
        "verify:\n"
        "  samplers:\n"
        "    enabled: false\n"
        "    samples: 500\n"
        "experiments:\n"
        "  diam_scaling:\n"
        "    family: sub_binary\n"
        "    sizes: [16, 64]\n"
        "    samples: 10\n"
        "    params: {k: 2}\n"
        "report:\n"
        "  output_format: json\n",
        encoding="utf-8",
    )
    config = ConfigLoader.load(str(path))
    assert config.sampler.seed == 3
    assert config.sampler.mcmc_burnin == 40
    assert config.sampler.max_rejections == 10 ** 6
    assert not config.verify.is_enabled("samplers")
    assert config.verify.suite("samplers").bound("samples", 20000) == 500
    assert config.experiments.diam_scaling == [
        ExperimentSpec(family="sub_binary", sizes=[16, 64], samples=10, seed=0, sampler="prufer", params={"k": 2})
    ]
    assert config.report.output_format == "json"


def test_empty_yaml_gives_defaults(tmp_path):
    path = tmp_path / "config.yaml"
    path.write_text("", encoding="utf-8")
    config = ConfigLoader.load(str(path))
    assert config.sampler == SamplerConfig()
    assert config.experiments.tree_tail == []


def test_spec_lists_and_default_samplers():
    config = ConfigLoader.from_dict({
        "experiments": {
            "kernel_diam": [
                {"family": "all_threes", "sizes": [200], "samples": 5, "seed": 1},
                {"family": "mixed_three_four", "sizes": [200], "samples": 5, "seed": 2, "enabled": False},
            ],
            "tree_tail": {"family": "biased_binary", "sizes": [64], "samples": 9, "xs": [1, 2.5],
                          "params": {"m": "2"}},
        }
    })
    kernel_specs = config.experiments.kernel_diam
    assert [s.sampler for s in kernel_specs] == ["reject", "reject"]
    assert [s.enabled for s in kernel_specs] == [True, False]
    (tail,) = config.experiments.tree_tail
    assert tail.sampler == "exact"
    assert tail.xs == [1.0, 2.5]
    assert tail.params == {"m": 2}


def test_connected_class_key():
    config = ConfigLoader.from_dict({
        "experiments": {"diam_scaling": {"family": "deg3seq", "sizes": [8], "class": "connected",
                                         "sampler": "reject"}}
    })
    (spec,) = config.experiments.diam_scaling
    assert spec.graph_class == "connected"
    assert spec.samples == 100


def test_verify_suites_and_bounds():
    verify = VerifyConfig(suites={"graphical": SuiteConfig(bounds={"max_vertices": 4})})
    assert verify.suite("graphical").bound("max_vertices", 6) == 4
    assert verify.suite("graphical").bound("max_sum", 16) == 16
    assert verify.suite("unknown").enabled


@pytest.mark.parametrize("kwargs", [
    {"max_rejections": 0},
    {"mcmc_burnin": -1},
    {"mcmc_thin": 0},
])
def test_sampler_config_validation(kwargs):
    with pytest.raises(ValueError):
        SamplerConfig(**kwargs)


def test_sampler_config_validation_through_from_dict():
    with pytest.raises(ValueError, match="mcmc_thin"):
        ConfigLoader.from_dict({"sampler": {"mcmc_thin": 0}})
