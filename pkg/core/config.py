"""DEA solver configuration."""

from dataclasses import dataclass
from enum import Enum
from typing import Optional

# Exact dynamic programs refuse tables larger than this many cells
DEFAULT_CELL_BUDGET = 50_000_000

# Search range sweep: L = min(MAX_SEARCH_RANGE, ceil(n / i)) for i in 1..RANGE_DIVISORS
MAX_SEARCH_RANGE = 50
RANGE_DIVISORS = 10

_VALID_LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")


class DepositionMethod(str, Enum):
    """Deposition strategies for building a template."""

    MF = "MF"  # Most Front: majority symbol at the fronts
    MC = "MC"  # Min Change: symbol minimising total front movement


class PoolMode(str, Enum):
    """Which templates enter the pool before extension."""

    FULL = "full"  # empty + single-symbol + deposition templates
    DEPOSITION = "deposition"  # empty + deposition templates
    BASIC = "basic"  # empty + single-symbol templates


class Algorithm(str, Enum):
    """Algorithms reachable from the command line and the bench harness."""

    DEA = "dea"
    DEA_MF = "dea-mf"
    DEA_MC = "dea-mc"
    DEA_FULL_RANGE = "dea-full-range"
    LONGRUN = "longrun"
    GREEDY = "greedy"
    TOURNAMENT = "tournament"
    EXACT = "exact"

    @property
    def is_dea(self) -> bool:
        """Check if the algorithm is a DEA variant."""
        return self.value.startswith("dea")


def parse_methods(methods) -> tuple[DepositionMethod, ...]:
    """Coerce an iterable of names or DepositionMethod values into a deduplicated tuple.

    Raises:
        ValueError: If a name is not MF or MC, or the result is empty.
    """
    if isinstance(methods, (str, DepositionMethod)):
        methods = [methods]
    result: list[DepositionMethod] = []
    for item in methods:
        try:
            method = DepositionMethod(str(getattr(item, "value", item)).strip().upper())
        except ValueError as e:
            raise ValueError(f"Unknown deposition method {item!r}, expected MF or MC") from e
        if method not in result:
            result.append(method)
    if not result:
        raise ValueError("At least one deposition method is required")
    return tuple(result)


@dataclass
class DEAConfig:
    """Configuration for the Deposition-and-Extension solver."""

    # Deposition
    methods: tuple[DepositionMethod, ...] = (DepositionMethod.MF, DepositionMethod.MC)
    search_range: Optional[int] = None  # Single L override; None = sweep
    max_search_range: int = MAX_SEARCH_RANGE
    range_divisors: int = RANGE_DIVISORS

    # Pool and extension
    pool_mode: PoolMode = PoolMode.FULL
    extension: bool = True

    # Exact oracles (bounds, "exact" algorithm)
    cell_budget: int = DEFAULT_CELL_BUDGET

    # Template extensions run on this many threads (1 = inline)
    workers: int = 1

    # Level for the dealcs logger; None leaves it as configured
    log_level: Optional[str] = None

    def validate(self) -> None:
        """Validate and normalize configuration values.

        Raises:
            ValueError: If any value is out of range or invalid.
        """
        self.methods = parse_methods(self.methods)

        if self.search_range is not None:
            try:
                search_range = int(self.search_range)
            except (TypeError, ValueError) as e:
                raise ValueError(
                    f"search_range must be an integer, got {self.search_range!r}"
                ) from e
            if search_range < 1:
                raise ValueError(f"search_range must be >= 1, got {search_range}")
            self.search_range = search_range

        for name in ("max_search_range", "range_divisors", "cell_budget", "workers"):
            try:
                val = int(getattr(self, name))
            except (TypeError, ValueError) as e:
                raise ValueError(f"{name} must be an integer, got {getattr(self, name)!r}") from e
            if val < 1:
                raise ValueError(f"{name} must be >= 1, got {val}")
            setattr(self, name, val)

        try:
            self.pool_mode = PoolMode(getattr(self.pool_mode, "value", self.pool_mode))
        except ValueError as e:
            raise ValueError(
                f"pool_mode must be one of {[m.value for m in PoolMode]}, got {self.pool_mode!r}"
            ) from e

        self.extension = bool(self.extension)

        if self.log_level is None:
            return
        if not isinstance(self.log_level, str):
            raise ValueError(f"log_level must be a string, got {type(self.log_level).__name__}")
        normalized = self.log_level.strip().upper()
        if normalized not in _VALID_LOG_LEVELS:
            raise ValueError(
                f"log_level must be one of {', '.join(_VALID_LOG_LEVELS)}, got {self.log_level!r}"
            )
        self.log_level = normalized
