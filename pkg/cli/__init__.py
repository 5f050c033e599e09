"""Command line, dataset files, reports and the benchmark harness.

This package provides:
- main, run, build_parser: the dea-lcs command line
- parse_input, write_dataset, format_dataset, InputFormat: dataset files
- BenchConfig, BenchRow, run_bench, write_csv: benchmark harness
- solve_report, bounds_report, render: JSON reports

Use __all__ as the canonical list of exported names.
"""

from .bench import BenchConfig, BenchReport, BenchRow, run_bench, write_csv
from .io import InputFormat, format_dataset, parse_input, write_dataset
from .main import build_parser, main, run
from .report import bounds_report, render, solve_report

__all__ = [
    "BenchConfig",
    "BenchReport",
    "BenchRow",
    "InputFormat",
    "bounds_report",
    "build_parser",
    "format_dataset",
    "main",
    "parse_input",
    "render",
    "run",
    "run_bench",
    "solve_report",
    "write_csv",
    "write_dataset",
]
