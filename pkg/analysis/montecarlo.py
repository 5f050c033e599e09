"""
Monte Carlo estimate of the expected pairwise LCS length of random sequences.

Trial t draws its pair from ``numpy.random.default_rng([seed, t])``, so an
estimate is reproducible from (seed, trials) and does not depend on the
order in which trials run.
"""

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from dealcs.baselines.pairwise import lcs_length
from dealcs.core.exceptions import DomainError
from dealcs.utils.logging import get_logger


@dataclass(frozen=True)
class ElcsEstimate:
    """Sample mean and sample standard deviation of the LCS length."""

    mean: float
    stddev: float
    trials: int


def _trial(n: int, sigma: int, seed: int, trial: int) -> int:
    rng = np.random.default_rng([seed, trial])
    s = rng.integers(0, sigma, size=n)
    t = rng.integers(0, sigma, size=n)
    return lcs_length(s, t)


def estimate_pairwise_elcs(
    n: int,
    sigma: int,
    trials: int,
    seed: int = 0,
    workers: int = 1,
) -> ElcsEstimate:
    """
    Estimate E(|LCS|) of two uniform random sequences of length n over sigma symbols.

    Args:
        n: Sequence length
        sigma: Alphabet size
        trials: Number of random pairs
        seed: Non-negative base seed
        workers: Threads used to run trials

    Returns:
        ElcsEstimate (stddev is 0 for a single trial)

    Raises:
        DomainError: If a parameter is out of range.
    """
    for name, value, minimum in (("n", n, 0), ("sigma", sigma, 1), ("trials", trials, 1)):
        if value < minimum:
            raise DomainError(f"{name} must be >= {minimum}, got {value}", name, value)
    if seed < 0:
        raise DomainError(f"seed must be >= 0, got {seed}", "seed", seed)

    def run(trial: int) -> int:
        return _trial(n, sigma, seed, trial)

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as executor:
            lengths = np.fromiter(executor.map(run, range(trials)), dtype=np.float64, count=trials)
    else:
        lengths = np.fromiter(map(run, range(trials)), dtype=np.float64, count=trials)

    stddev = float(lengths.std(ddof=1)) if trials > 1 else 0.0
    estimate = ElcsEstimate(float(lengths.mean()), stddev, trials)
    get_logger().debug(
        f"elcs n={n} sigma={sigma}: mean={estimate.mean:.2f} sd={estimate.stddev:.2f} "
        f"over {trials} trials"
    )
    return estimate
