"""
Search-range calculus.

A symbol with content r lands within the next L characters of one random
sequence with probability 1 - (1 - r)^L, and within the windows of all k
sequences with the existence probability

    P = (1 - (1 - r)^L)^k

Solving for L gives the range needed for a target P:

    L = log(1 - P^(1/k)) / log(1 - r)

For evenly distributed symbols r = 1/|Σ|. The expected LCS length E bounds
the useful range from below, L >= ceil(n / E), and a deposition with range L
is expected to produce about 2n/L - 1 symbols.

Powers and logs near 1 go through expm1/log1p so k in the thousands keeps
full precision.
"""

import math
import numbers
from collections.abc import Iterable
from dataclasses import dataclass
from typing import Optional, Union

from dealcs.core.config import MAX_SEARCH_RANGE, RANGE_DIVISORS
from dealcs.core.exceptions import DomainError

Number = Union[int, float]


def _require(condition: bool, parameter: str, value: object, expected: str) -> None:
    if not condition:
        raise DomainError(f"{parameter} must be {expected}, got {value!r}", parameter, value)


def _require_int(value: object, parameter: str, minimum: int) -> int:
    _require(
        isinstance(value, numbers.Integral) and not isinstance(value, bool) and value >= minimum,
        parameter,
        value,
        f"an integer >= {minimum}",
    )
    return int(value)  # type: ignore[arg-type]


def _require_open_unit(value: object, parameter: str) -> float:
    _require(
        isinstance(value, numbers.Real) and not isinstance(value, bool) and 0 < value < 1,
        parameter,
        value,
        "in the open interval (0, 1)",
    )
    return float(value)  # type: ignore[arg-type]


def _log_one_minus_root(p: float, k: int) -> float:
    """log(1 - p^(1/k))."""
    return math.log(-math.expm1(math.log(p) / k))


def range_lower_bound(n: int, expected_lcs: Number) -> int:
    """
    Smallest search range consistent with an expected LCS length: ceil(n / E).

    Raises:
        DomainError: If n < 1 or expected_lcs <= 0.
    """
    n = _require_int(n, "n", 1)
    _require(
        isinstance(expected_lcs, numbers.Real) and expected_lcs > 0,
        "expected_lcs",
        expected_lcs,
        "> 0",
    )
    return math.ceil(n / expected_lcs)


def existence_probability(r: float, search_range: int, k: int) -> float:
    """
    Probability that a symbol of content r appears in all k search windows.

    Raises:
        DomainError: If r is outside (0, 1), or search_range or k is below 1.
    """
    r = _require_open_unit(r, "r")
    search_range = _require_int(search_range, "L", 1)
    k = _require_int(k, "k", 1)
    single = -math.expm1(search_range * math.log1p(-r))
    return single**k


def range_for_probability(p: float, k: int, r: float) -> float:
    """
    Real-valued search range giving existence probability p (ceil it for a usable L).

    Raises:
        DomainError: If p or r is outside (0, 1), or k < 1.
    """
    p = _require_open_unit(p, "P")
    k = _require_int(k, "k", 1)
    r = _require_open_unit(r, "r")
    return _log_one_minus_root(p, k) / math.log1p(-r)


def existence_probability_uniform(sigma: int, search_range: int, k: int) -> float:
    """
    Existence probability for evenly distributed symbols over an alphabet of size sigma.

    Raises:
        DomainError: If sigma < 2, or search_range or k is below 1.
    """
    sigma = _require_int(sigma, "sigma", 2)
    return existence_probability(1.0 / sigma, search_range, k)


def range_for_probability_uniform(p: float, k: int, sigma: int) -> float:
    """
    Real-valued search range for evenly distributed symbols.

    Raises:
        DomainError: If p is outside (0, 1), k < 1 or sigma < 2.
    """
    p = _require_open_unit(p, "P")
    k = _require_int(k, "k", 1)
    sigma = _require_int(sigma, "sigma", 2)
    return _log_one_minus_root(p, k) / math.log1p(-1.0 / sigma)


def expected_lcs_estimate(n: int, search_range: int) -> float:
    """
    Expected deposition length for sequence length n and range L: 2n/L - 1.

    Raises:
        DomainError: Unless n >= L >= 1.
    """
    search_range = _require_int(search_range, "L", 1)
    n = _require_int(n, "n", search_range)
    return 2.0 * n / search_range - 1.0


def default_search_ranges(
    n: int,
    cap: int = MAX_SEARCH_RANGE,
    divisors: int = RANGE_DIVISORS,
) -> tuple[int, ...]:
    """
    Search ranges swept by the solver: max(1, min(cap, ceil(n / i))) for i = 1..divisors.

    Duplicates are dropped, first occurrence kept, so the tuple is non-increasing.

    Args:
        n: Longest sequence length (0 allowed)
        cap: Largest range to use
        divisors: Number of divisors i to try

    Returns:
        Deduplicated ranges in divisor order
    """
    if n < 0:
        raise DomainError(f"n must be >= 0, got {n}", "n", n)
    if cap < 1 or divisors < 1:
        raise DomainError(f"cap and divisors must be >= 1, got {cap}, {divisors}", "cap", cap)
    ranges: dict[int, None] = {}
    for i in range(1, divisors + 1):
        ranges.setdefault(max(1, min(cap, -(-n // i))), None)
    return tuple(ranges)


@dataclass(frozen=True)
class RangeQuery:
    """
    Target existence probability for k sequences, given a symbol content r or a uniform alphabet size.

    Exactly one of ``r`` and ``sigma`` is set.
    """

    p: float
    k: int
    r: Optional[float] = None
    sigma: Optional[int] = None

    def __post_init__(self) -> None:
        _require_open_unit(self.p, "P")
        _require_int(self.k, "k", 1)
        if (self.r is None) == (self.sigma is None):
            raise DomainError("exactly one of r and sigma must be set", "r", self.r)
        if self.r is not None:
            _require_open_unit(self.r, "r")
        else:
            _require_int(self.sigma, "sigma", 2)

    @property
    def content(self) -> float:
        """Symbol content used by the formulas (1/sigma in the uniform case)."""
        if self.r is not None:
            return self.r
        return 1.0 / self.sigma  # type: ignore[operator]

    def solve(self) -> float:
        """Real-valued search range reaching probability p."""
        if self.r is not None:
            return range_for_probability(self.p, self.k, self.r)
        return range_for_probability_uniform(self.p, self.k, self.sigma)  # type: ignore[arg-type]

    def required_range(self) -> int:
        """Smallest integer search range with existence probability >= p."""
        return max(1, math.ceil(self.solve()))

    def probability(self, search_range: int) -> float:
        """Existence probability at a given search range."""
        if self.r is not None:
            return existence_probability(self.r, search_range, self.k)
        return existence_probability_uniform(self.sigma, search_range, self.k)  # type: ignore[arg-type]


@dataclass(frozen=True)
class RangeRow:
    """One grid point of a search-range table."""

    k: int
    r: Optional[float]
    sigma: Optional[int]
    search_range: float

    @property
    def required_range(self) -> int:
        """Ceiling of the real-valued range."""
        return max(1, math.ceil(self.search_range))


def search_range_table(
    p: float,
    k_values: Iterable[int],
    r_values: Optional[Iterable[float]] = None,
    sigma_values: Optional[Iterable[int]] = None,
) -> list[RangeRow]:
    """
    Search ranges over a grid of sequence counts and contents (or alphabet sizes).

    Rows are ordered by k, then by r or sigma, in the order given.

    Raises:
        DomainError: If neither or both of r_values and sigma_values are given,
            or a grid value is out of its domain.
    """
    if (r_values is None) == (sigma_values is None):
        raise DomainError("exactly one of r_values and sigma_values must be given", "r_values")
    r_list = list(r_values) if r_values is not None else []
    sigma_list = list(sigma_values) if sigma_values is not None else []

    rows = []
    for k in k_values:
        for r in r_list:
            rows.append(RangeRow(k, r, None, RangeQuery(p, k, r=r).solve()))
        for sigma in sigma_list:
            rows.append(RangeRow(k, None, sigma, RangeQuery(p, k, sigma=sigma).solve()))
    return rows
