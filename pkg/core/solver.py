"""
Deposition-and-Extension solver and algorithm dispatch.

DEASolver coordinates the stages: it picks the search ranges, builds the
template pool, extends every template and keeps the longest result.

    solver = DEASolver(DEAConfig(methods=("MC",)))
    result = solver.solve(Dataset.from_strings(["ACAC", "CACA"]))
    result.length  # 3

solve_with() runs any named algorithm (DEA variants or a baseline) and
returns the same SolveResult shape, so the command line and the bench
harness treat them alike.
"""

import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, replace
from typing import Optional, Union

from dealcs.analysis.search_range import default_search_ranges
from dealcs.baselines.exact import lcs_k
from dealcs.baselines.longrun import long_run
from dealcs.baselines.pairwise import greedy, tournament
from dealcs.stages.extension import build_pool, grow
from dealcs.stages.templates import OriginKind, Template, TemplateOrigin
from dealcs.utils.logging import get_logger, log_solve_summary, log_template

from .config import Algorithm, DEAConfig, DepositionMethod
from .sequences import Dataset, Sequence


@dataclass
class SolveResult:
    """Result of one solve."""

    algorithm: str
    cs: Sequence
    origin: Optional[TemplateOrigin] = None
    search_range_used: Optional[int] = None
    elapsed: float = 0.0  # seconds
    template_length: Optional[int] = None  # winning template before extension
    pool_size: int = 0
    search_ranges: tuple[int, ...] = ()

    @property
    def length(self) -> int:
        """Length of the common subsequence."""
        return len(self.cs)


def _winner_key(extended: Template, position: int) -> tuple:
    return (-len(extended), tuple(extended.body), extended.origin.rank, position)


class DEASolver:
    """
    Deposition-and-Extension solver.

    Usage:
        solver = DEASolver(DEAConfig(search_range=20))
        result = solver.solve(dataset)
        print(dataset.decode(result.cs), result.origin.describe(dataset.alphabet))
    """

    def __init__(self, config: Optional[DEAConfig] = None):
        """
        Initialize the solver.

        Args:
            config: Solver settings (uses defaults if not provided)

        Raises:
            ValueError: If the configuration is invalid.
        """
        self.config = config or DEAConfig()
        self.config.validate()
        self._logger = get_logger()
        if self.config.log_level is not None:
            self._logger.setLevel(self.config.log_level)

    def search_ranges(self, dataset: Dataset) -> tuple[int, ...]:
        """Search ranges to deposit with: the override, or the sweep over n = max_len."""
        if self.config.search_range is not None:
            return (self.config.search_range,)
        return default_search_ranges(
            dataset.max_len, self.config.max_search_range, self.config.range_divisors
        )

    def _extend_all(self, templates: list[Template], dataset: Dataset) -> list[Template]:
        if not self.config.extension:
            return list(templates)
        if self.config.workers > 1 and len(templates) > 1:
            # Warm the shared index before threads read it
            _ = dataset.index
            with ThreadPoolExecutor(max_workers=self.config.workers) as executor:
                return list(executor.map(lambda t: grow(t, dataset), templates))
        return [grow(template, dataset) for template in templates]

    def solve(self, dataset: Dataset, algorithm: str = Algorithm.DEA.value) -> SolveResult:
        """
        Solve one dataset.

        The winner is the longest extended template; ties go to the body that
        is smallest in alphabet order, then to the origin order MF, MC,
        basic, empty, then to pool order.

        Args:
            dataset: Problem instance
            algorithm: Name reported in the result

        Returns:
            SolveResult whose cs is a common subsequence of the dataset
        """
        start = time.perf_counter()
        ranges = self.search_ranges(dataset)
        pool = build_pool(dataset, ranges, self.config.methods, self.config.pool_mode)
        templates = list(pool)
        extended = self._extend_all(templates, dataset)
        for template in extended:
            log_template(template, dataset.alphabet, "extended", self._logger)

        best = min(range(len(extended)), key=lambda i: _winner_key(extended[i], i))
        winner = extended[best]
        log_template(winner, dataset.alphabet, "winner", self._logger)

        origin = winner.origin
        result = SolveResult(
            algorithm=algorithm,
            cs=winner.body,
            origin=origin,
            search_range_used=(
                origin.search_range if origin.kind is OriginKind.DEPOSITION else None
            ),
            elapsed=time.perf_counter() - start,
            template_length=len(templates[best]),
            pool_size=len(pool),
            search_ranges=ranges,
        )
        log_solve_summary(result, dataset.alphabet, self._logger)
        return result


def dea_solve(
    dataset: Dataset,
    search_range: Optional[int] = None,
    methods=(DepositionMethod.MF, DepositionMethod.MC),
    config: Optional[DEAConfig] = None,
) -> SolveResult:
    """
    Solve with DEA.

    Args:
        dataset: Problem instance
        search_range: Single L to use instead of the sweep
        methods: Deposition rules (MF, MC or both)
        config: Base configuration; search_range and methods override it

    Returns:
        SolveResult
    """
    base = config or DEAConfig()
    overrides = {"methods": methods}
    if search_range is not None:
        overrides["search_range"] = search_range
    return DEASolver(replace(base, **overrides)).solve(dataset)


def config_for(algorithm: Union[Algorithm, str], dataset: Dataset, base: DEAConfig) -> DEAConfig:
    """
    Configuration for a DEA variant.

    dea-mf and dea-mc restrict the deposition rule; dea-full-range runs MC
    with the single range L = max_len.
    """
    algorithm = Algorithm(algorithm)
    if algorithm is Algorithm.DEA_MF:
        return replace(base, methods=(DepositionMethod.MF,))
    if algorithm is Algorithm.DEA_MC:
        return replace(base, methods=(DepositionMethod.MC,))
    if algorithm is Algorithm.DEA_FULL_RANGE:
        return replace(
            base, methods=(DepositionMethod.MC,), search_range=max(1, dataset.max_len)
        )
    return replace(base)


def solve_with(
    dataset: Dataset,
    algorithm: Union[Algorithm, str],
    config: Optional[DEAConfig] = None,
) -> SolveResult:
    """
    Run a named algorithm.

    Args:
        dataset: Problem instance
        algorithm: Algorithm or its command-line name
        config: DEA settings; cell_budget also applies to "exact"

    Returns:
        SolveResult (origin and ranges are only set for DEA variants)

    Raises:
        ValueError: If the algorithm name is unknown.
        BudgetExceededError: If "exact" exceeds the cell budget.
    """
    try:
        algorithm = Algorithm(getattr(algorithm, "value", algorithm))
    except ValueError as e:
        names = ", ".join(a.value for a in Algorithm)
        raise ValueError(f"Unknown algorithm {algorithm!r}, expected one of {names}") from e

    config = config or DEAConfig()
    if algorithm.is_dea:
        solver = DEASolver(config_for(algorithm, dataset, config))
        return solver.solve(dataset, algorithm.value)

    config.validate()
    start = time.perf_counter()
    if algorithm is Algorithm.LONGRUN:
        cs = long_run(dataset).cs
    elif algorithm is Algorithm.GREEDY:
        cs = greedy(dataset)
    elif algorithm is Algorithm.TOURNAMENT:
        cs = tournament(dataset)
    else:
        cs = lcs_k(dataset, config.cell_budget)
    result = SolveResult(algorithm.value, cs, elapsed=time.perf_counter() - start)
    log_solve_summary(result, dataset.alphabet)
    return result
