"""
DEA-LCS - Longest common subsequence of many sequences by Deposition and Extension.

The Longest Common Subsequence problem on k sequences is NP-hard for
arbitrary k. This package finds long common subsequences in near-linear time
per template:

Pipeline:
    - Deposition: advance one front per sequence, depositing a symbol onto
      the template whenever it occurs within the next L characters of every
      sequence (MF: majority front symbol; MC: least total front movement)
    - Template pool: deposition templates over a sweep of L, every common
      single symbol, and the empty template
    - Extension: grow each template at its ends and inside its runs; the
      longest result wins (never shorter than Long Run)

Also included:
    - Baselines: Long Run, Greedy and Tournament pair merging
    - Exact oracles: pairwise and k-way dynamic programs, brute force
    - Upper bounds and performance ratios
    - Search-range analysis and expected-length simulation
    - Seeded dataset generators and a benchmark command line (dea-lcs)

Public API (import from dealcs):
    Alphabet, Dataset, Sequence, DEAConfig, DEASolver, SolveResult, dea_solve,
    solve_with, is_common_subsequence, DEAError, __version__
"""

from dealcs.core.config import Algorithm, DEAConfig, DepositionMethod, PoolMode
from dealcs.core.exceptions import (
    BudgetExceededError,
    DEAError,
    DomainError,
    InputParseError,
)
from dealcs.core.sequences import (
    Alphabet,
    Dataset,
    Sequence,
    alphabet_content,
    is_common_subsequence,
    is_subsequence,
)
from dealcs.core.solver import DEASolver, SolveResult, dea_solve, solve_with

__version__ = "0.1.0"
__author__ = "DEA-LCS Development"

__all__ = [
    "Algorithm",
    "Alphabet",
    "BudgetExceededError",
    "DEAConfig",
    "DEAError",
    "DEASolver",
    "Dataset",
    "DepositionMethod",
    "DomainError",
    "InputParseError",
    "PoolMode",
    "Sequence",
    "SolveResult",
    "alphabet_content",
    "dea_solve",
    "is_common_subsequence",
    "is_subsequence",
    "solve_with",
    "__version__",
]
