"""DEA exception classes.

All library exceptions inherit from DEAError. Catch DEAError to handle any
solver, oracle, parsing or analysis error. Use specific subclasses for
finer-grained handling or to access optional context attributes.

Exception hierarchy and optional context:
- DEAError: base (no context)
- DomainError: parameter, value (also a ValueError)
- EmptyDatasetError: (no context, also a ValueError)
- NotCommonSubsequenceError: sequence_index
- InvalidResultError: algorithm, dataset_id
- BruteForceLimitError: length, limit
- BudgetExceededError: cells, budget
- InputParseError: path, line_number
- GeneratorSpecError: field (also a ValueError)
- UsageError: (no context)

Every class carries an ``exit_code`` that the command line maps to the
process exit status (1 usage/domain, 2 parse, 3 resource budget).
"""

from typing import Optional

__all__ = [
    "DEAError",
    "DomainError",
    "EmptyDatasetError",
    "NotCommonSubsequenceError",
    "InvalidResultError",
    "BruteForceLimitError",
    "BudgetExceededError",
    "InputParseError",
    "GeneratorSpecError",
    "UsageError",
]


class DEAError(Exception):
    """Base exception for all DEA-related errors."""

    exit_code = 1


class DomainError(DEAError, ValueError):
    """Raised when a formula or estimator receives a parameter outside its domain."""

    def __init__(
        self,
        message: str,
        parameter: Optional[str] = None,
        value: Optional[object] = None,
    ) -> None:
        super().__init__(message)
        self.parameter = parameter
        self.value = value


class EmptyDatasetError(DEAError, ValueError):
    """Raised when an operation needs at least one symbol but every sequence is empty."""

    pass


class NotCommonSubsequenceError(DEAError):
    """Raised when a template handed to the extension stage is not a common subsequence."""

    def __init__(self, message: str, sequence_index: Optional[int] = None) -> None:
        super().__init__(message)
        self.sequence_index = sequence_index


class InvalidResultError(DEAError):
    """Raised when the independent checker rejects an algorithm's output."""

    def __init__(
        self,
        message: str,
        algorithm: Optional[str] = None,
        dataset_id: Optional[str] = None,
    ) -> None:
        super().__init__(message)
        self.algorithm = algorithm
        self.dataset_id = dataset_id


class BruteForceLimitError(DEAError):
    """Raised when the brute-force oracle would enumerate too many subsequences."""

    exit_code = 3

    def __init__(
        self,
        message: str,
        length: Optional[int] = None,
        limit: Optional[int] = None,
    ) -> None:
        super().__init__(message)
        self.length = length
        self.limit = limit


class BudgetExceededError(DEAError):
    """Raised when an exact dynamic program would exceed its cell budget."""

    exit_code = 3

    def __init__(
        self,
        message: str,
        cells: Optional[int] = None,
        budget: Optional[int] = None,
    ) -> None:
        super().__init__(message)
        self.cells = cells
        self.budget = budget


class InputParseError(DEAError):
    """Raised when an input file cannot be turned into a dataset."""

    exit_code = 2

    def __init__(
        self,
        message: str,
        path: Optional[str] = None,
        line_number: Optional[int] = None,
    ) -> None:
        location = ""
        if path is not None:
            location = f"{path}:{line_number}: " if line_number is not None else f"{path}: "
        super().__init__(f"{location}{message}")
        self.path = path
        self.line_number = line_number


class GeneratorSpecError(DEAError, ValueError):
    """Raised when a dataset generator spec violates its invariants."""

    def __init__(self, message: str, field: Optional[str] = None) -> None:
        super().__init__(message)
        self.field = field


class UsageError(DEAError):
    """Raised for command-line usage errors (bad flags, missing arguments)."""

    pass
