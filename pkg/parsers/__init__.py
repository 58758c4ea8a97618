"""
Configuration parsers and loaders.
"""

from .config_loader import (
    ConfigLoader,
    SamplerConfig,
    SuiteConfig,
    VerifyConfig,
    ExperimentsConfig,
    ReportConfig,
    LabConfig
)

__all__ = [
    "ConfigLoader",
    "SamplerConfig",
    "SuiteConfig",
    "VerifyConfig",
    "ExperimentsConfig",
    "ReportConfig",
    "LabConfig"
]
