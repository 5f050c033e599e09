"""
Machine-readable reports for solve and bounds.

A solve report always carries the fields

    {algorithm, cs, length, valid, elapsed_ms, config{method, search_ranges, seed}}

plus dataset and provenance details. ``valid`` is recomputed with the
independent checker, never taken from the solver.
"""

import json
from typing import Any, Optional

from dealcs.analysis.ratios import performance_ratio
from dealcs.baselines.bounds import BoundsReport
from dealcs.core.config import Algorithm, DEAConfig
from dealcs.core.sequences import Dataset, is_common_subsequence
from dealcs.core.solver import SolveResult, config_for


def dataset_info(dataset: Dataset) -> dict[str, Any]:
    """Summary of a dataset for reports."""
    return {
        "name": dataset.name,
        "k": dataset.k,
        "sigma": dataset.sigma,
        "min_len": dataset.min_len,
        "max_len": dataset.max_len,
        "alphabet": "".join(dataset.alphabet.symbols),
    }


def solve_report(
    result: SolveResult,
    dataset: Dataset,
    config: DEAConfig,
    seed: Optional[int] = None,
) -> dict[str, Any]:
    """
    Build the report for one solve.

    Args:
        result: Solver output
        dataset: The solved dataset
        config: Configuration the solve ran with (echoed)
        seed: Generator seed, if the dataset was generated

    Returns:
        JSON-serialisable dict
    """
    algorithm = Algorithm(result.algorithm)
    method = None
    if algorithm.is_dea:
        method = [m.value for m in config_for(algorithm, dataset, config).methods]

    origin = result.origin.describe(dataset.alphabet) if result.origin is not None else None
    return {
        "algorithm": result.algorithm,
        "cs": dataset.decode(result.cs),
        "length": result.length,
        "valid": is_common_subsequence(result.cs, dataset),
        "elapsed_ms": round(result.elapsed * 1000.0, 3),
        "config": {
            "method": method,
            "search_ranges": list(result.search_ranges),
            "seed": seed,
        },
        "origin": origin,
        "search_range_used": result.search_range_used,
        "template_length": result.template_length,
        "pool_size": result.pool_size,
        "dataset": dataset_info(dataset),
    }


def bounds_report(
    bounds: BoundsReport,
    dataset: Dataset,
    results: list[SolveResult],
) -> dict[str, Any]:
    """
    Build the report for an upper-bound computation.

    Each result gets the ratio upper_bound / length (None for an empty result).
    """
    ratios: dict[str, Optional[float]] = {}
    lengths: dict[str, int] = {}
    for result in results:
        lengths[result.algorithm] = result.length
        ratios[result.algorithm] = (
            round(performance_ratio(bounds.upper_bound, result.length).ratio, 6)
            if result.length > 0
            else None
        )
    return {
        "upper_bound": bounds.upper_bound,
        "chosen_sequence_indices": list(bounds.chosen_sequence_indices),
        "exact": bounds.exact,
        "lengths": lengths,
        "ratios": ratios,
        "dataset": dataset_info(dataset),
    }


def render(report: dict[str, Any]) -> str:
    """Serialise a report as indented JSON with a trailing newline."""
    return json.dumps(report, indent=2, ensure_ascii=False) + "\n"
