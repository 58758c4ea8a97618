"""
Configuration loader for YAML config files.
"""

import os
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

from models import ExperimentSpec

try:
    import yaml
    YAML_AVAILABLE = True
except ImportError:
    YAML_AVAILABLE = False


@dataclass
class SamplerConfig:
    """Seeding and caps shared by every sampler"""
    seed: int = 20240901
    max_rejections: int = 10 ** 6
    mcmc_burnin: Optional[int] = None  # None: 10 e ln e proposals
    mcmc_thin: int = 1

    def __post_init__(self):
        if self.max_rejections < 1:
            raise ValueError("sampler.max_rejections must be positive")
        if self.mcmc_burnin is not None and self.mcmc_burnin < 0:
            raise ValueError("sampler.mcmc_burnin must be non-negative")
        if self.mcmc_thin < 1:
            raise ValueError("sampler.mcmc_thin must be positive")


@dataclass
class SuiteConfig:
    """One verify suite: on/off plus its enumeration bounds"""
    enabled: bool = True
    bounds: Dict[str, int] = field(default_factory=dict)

    def bound(self, key: str, default: int) -> int:
        return int(self.bounds.get(key, default))


@dataclass
class VerifyConfig:
    """Exhaustive verify suites keyed by suite name"""
    suites: Dict[str, SuiteConfig] = field(default_factory=dict)

    def suite(self, name: str) -> SuiteConfig:
        return self.suites.get(name, SuiteConfig())

    def is_enabled(self, name: str) -> bool:
        return self.suite(name).enabled


@dataclass
class ExperimentsConfig:
    """Monte Carlo experiments"""
    diam_scaling: List[ExperimentSpec] = field(default_factory=list)
    kernel_diam: List[ExperimentSpec] = field(default_factory=list)
    tree_tail: List[ExperimentSpec] = field(default_factory=list)


@dataclass
class ReportConfig:
    """Configuration for report generation"""
    output_format: str = "both"  # text, json, csv, both
    output_dir: str = "results"


@dataclass
class LabConfig:
    """Complete lab configuration"""
    sampler: SamplerConfig
    verify: VerifyConfig
    experiments: ExperimentsConfig
    report: ReportConfig


def _optional_float(value: Any) -> Optional[float]:
    return None if value is None else float(value)


def _optional_window(value: Any) -> Optional[List[float]]:
    if value is None:
        return None
    if len(value) != 2:
        raise ValueError(f"slope_window needs [low, high], got {value}")
    return [float(value[0]), float(value[1])]


def _parse_specs(section: Any, default_sampler: str) -> List[ExperimentSpec]:
    """An experiment section is one mapping or a list of them"""
    if not section:
        return []
    entries = section if isinstance(section, list) else [section]
    specs = []
    for entry in entries:
        specs.append(ExperimentSpec(
            family=entry["family"],
            sizes=[int(s) for s in entry.get("sizes", [])],
            samples=int(entry.get("samples", 100)),
            seed=int(entry.get("seed", 0)),
            sampler=entry.get("sampler", default_sampler),
            graph_class=entry.get("class", "all"),
            params={k: int(v) for k, v in (entry.get("params") or {}).items()},
            xs=[float(x) for x in entry.get("xs", [])],
            enabled=entry.get("enabled", True),
            slope_window=_optional_window(entry.get("slope_window")),
            max_ratio_variation=_optional_float(entry.get("max_ratio_variation"))
        ))
    return specs


class ConfigLoader:
    """Loads and parses YAML configuration files"""

    @staticmethod
    def load(config_path: Optional[str] = None) -> LabConfig:
        """
        Load configuration from YAML file.

        Args:
            config_path: Path to config file. If None, looks for config.yaml in current directory.

        Returns:
            LabConfig object
        """
        if config_path is None:
            config_path = "config.yaml"

        if not os.path.exists(config_path):
            return ConfigLoader._default_config()

        if not YAML_AVAILABLE:
            print("Warning: PyYAML not installed. Using default configuration.")
            print("Install with: pip install pyyaml")
            return ConfigLoader._default_config()

        with open(config_path, 'r') as f:
            config_data = yaml.safe_load(f) or {}
        return ConfigLoader.from_dict(config_data)

    @staticmethod
    def from_dict(config_data: Dict[str, Any]) -> LabConfig:
        sampler_data = config_data.get("sampler", {}) or {}
        sampler_config = SamplerConfig(
            seed=int(sampler_data.get("seed", SamplerConfig.seed)),
            max_rejections=int(sampler_data.get("max_rejections", SamplerConfig.max_rejections)),
            mcmc_burnin=sampler_data.get("mcmc_burnin"),
            mcmc_thin=int(sampler_data.get("mcmc_thin", 1))
        )

        verify_data = config_data.get("verify", {}) or {}
        verify_config = VerifyConfig(suites={
            name: SuiteConfig(
                enabled=(body or {}).get("enabled", True),
                bounds={k: v for k, v in (body or {}).items() if k != "enabled"}
            )
            for name, body in verify_data.items()
        })

        experiments_data = config_data.get("experiments", {}) or {}
        experiments_config = ExperimentsConfig(
            diam_scaling=_parse_specs(experiments_data.get("diam_scaling"), "prufer"),
            kernel_diam=_parse_specs(experiments_data.get("kernel_diam"), "reject"),
            tree_tail=_parse_specs(experiments_data.get("tree_tail"), "exact")
        )

        report_data = config_data.get("report", {}) or {}
        report_config = ReportConfig(
            output_format=report_data.get("output_format", "both"),
            output_dir=report_data.get("output_dir", "results")
        )

        return LabConfig(
            sampler=sampler_config,
            verify=verify_config,
            experiments=experiments_config,
            report=report_config
        )

    @staticmethod
    def _default_config() -> LabConfig:
        """Returns default configuration with every verify suite enabled and no experiments"""
        return LabConfig(
            sampler=SamplerConfig(),
            verify=VerifyConfig(),
            experiments=ExperimentsConfig(),
            report=ReportConfig()
        )
