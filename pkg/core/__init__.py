"""Core DEA components.

This package provides:
- Alphabet, Sequence, Dataset, AlphabetStats: problem-instance types
- is_subsequence, is_common_subsequence, alphabet_content: predicates and statistics
- SubsequenceIndex: next/previous occurrence tables (Dataset.index)
- DEAConfig, DepositionMethod, PoolMode, Algorithm: configuration (validate() called on solver init)
- DEASolver, dea_solve, solve_with, SolveResult: solving
- DEA exception hierarchy: DEAError, DomainError, EmptyDatasetError, NotCommonSubsequenceError,
  InvalidResultError, BruteForceLimitError, BudgetExceededError, InputParseError,
  GeneratorSpecError, UsageError

Use __all__ as the canonical list of exported names.
"""

from .config import (
    DEFAULT_CELL_BUDGET,
    Algorithm,
    DEAConfig,
    DepositionMethod,
    PoolMode,
    parse_methods,
)
from .exceptions import (
    BruteForceLimitError,
    BudgetExceededError,
    DEAError,
    DomainError,
    EmptyDatasetError,
    GeneratorSpecError,
    InputParseError,
    InvalidResultError,
    NotCommonSubsequenceError,
    UsageError,
)
from .index import SubsequenceIndex
from .sequences import (
    Alphabet,
    AlphabetStats,
    Dataset,
    Sequence,
    alphabet_content,
    is_common_subsequence,
    is_subsequence,
)
from .solver import DEASolver, SolveResult, dea_solve, solve_with

__all__ = [
    "DEFAULT_CELL_BUDGET",
    "Algorithm",
    "Alphabet",
    "AlphabetStats",
    "BruteForceLimitError",
    "BudgetExceededError",
    "DEAConfig",
    "DEAError",
    "DEASolver",
    "Dataset",
    "DepositionMethod",
    "DomainError",
    "EmptyDatasetError",
    "GeneratorSpecError",
    "InputParseError",
    "InvalidResultError",
    "NotCommonSubsequenceError",
    "PoolMode",
    "Sequence",
    "SolveResult",
    "SubsequenceIndex",
    "UsageError",
    "alphabet_content",
    "dea_solve",
    "is_common_subsequence",
    "is_subsequence",
    "parse_methods",
    "solve_with",
]
