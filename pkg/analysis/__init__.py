"""Search-range analysis, performance ratios and expected-length simulation.

This package provides:
- range_lower_bound, existence_probability(_uniform), range_for_probability(_uniform),
  expected_lcs_estimate: closed-form search-range formulas
- default_search_ranges: the solver's L sweep
- RangeQuery, RangeRow, search_range_table: solving for L over grids
- performance_ratio, RatioReport
- estimate_pairwise_elcs, ElcsEstimate: Monte Carlo expected pairwise LCS length

Use __all__ as the canonical list of exported names.
"""

from .montecarlo import ElcsEstimate, estimate_pairwise_elcs
from .ratios import RatioReport, performance_ratio
from .search_range import (
    RangeQuery,
    RangeRow,
    default_search_ranges,
    existence_probability,
    existence_probability_uniform,
    expected_lcs_estimate,
    range_for_probability,
    range_for_probability_uniform,
    range_lower_bound,
    search_range_table,
)

__all__ = [
    "ElcsEstimate",
    "RangeQuery",
    "RangeRow",
    "RatioReport",
    "default_search_ranges",
    "estimate_pairwise_elcs",
    "existence_probability",
    "existence_probability_uniform",
    "expected_lcs_estimate",
    "performance_ratio",
    "range_for_probability",
    "range_for_probability_uniform",
    "range_lower_bound",
    "search_range_table",
]
