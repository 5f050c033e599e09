"""Comparison algorithms and exact oracles.

This package provides:
- long_run, LongRunResult: longest common single-symbol repetition
- lcs2, lcs_length, lcs_table: pairwise LCS
- greedy, tournament: pair-merging heuristics
- lcs_k, brute_force_lcs: exact oracles (budgeted k-way DP, exhaustive search)
- upper_bound, BoundsReport: subset-based upper bound on the LCS length

Use __all__ as the canonical list of exported names.
"""

from .bounds import BoundsReport, choose_sequences, upper_bound
from .exact import brute_force_lcs, check_budget, lcs_k, table_cells
from .longrun import LongRunResult, long_run, symbol_counts
from .pairwise import greedy, lcs2, lcs_length, lcs_table, tournament

__all__ = [
    "BoundsReport",
    "LongRunResult",
    "brute_force_lcs",
    "check_budget",
    "choose_sequences",
    "greedy",
    "lcs2",
    "lcs_k",
    "lcs_length",
    "lcs_table",
    "long_run",
    "symbol_counts",
    "table_cells",
    "tournament",
    "upper_bound",
]
