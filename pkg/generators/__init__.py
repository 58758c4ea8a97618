"""
Report generators for verify suites and experiment results.
"""

from .report_generator import TextReportGenerator, JSONReportGenerator, CSVReportGenerator

__all__ = [
    "TextReportGenerator",
    "JSONReportGenerator",
    "CSVReportGenerator"
]
