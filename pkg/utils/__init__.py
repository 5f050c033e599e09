"""
DEA-LCS utility modules.

This package provides:
- Logging: setup_logging, get_logger, log_template, log_solve_summary.
"""

from dealcs.utils.logging import (
    get_logger,
    log_solve_summary,
    log_template,
    setup_logging,
)

__all__ = [
    "get_logger",
    "log_solve_summary",
    "log_template",
    "setup_logging",
]
