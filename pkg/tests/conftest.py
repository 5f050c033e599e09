"""Shared fixtures: seeded random instances and hypothesis profiles."""

import logging

import hypothesis
import numpy as np
import pytest

from dealcs.core.sequences import Alphabet, Dataset, Sequence

np.seterr(all="warn")

hypothesis.settings.register_profile("fast", max_examples=5)
hypothesis.settings.register_profile("debugger", report_multiple_bugs=False)


def random_dataset(
    rng: np.random.Generator,
    k: int,
    max_len: int,
    sigma: int,
    min_len: int = 0,
) -> Dataset:
    """k uniform random sequences with lengths drawn from [min_len, max_len]."""
    alphabet = Alphabet(tuple(chr(ord("A") + i) if i < 26 else chr(0x100 + i) for i in range(sigma)))
    sequences = tuple(
        Sequence(tuple(rng.integers(0, sigma, size=int(rng.integers(min_len, max_len + 1))).tolist()))
        for _ in range(k)
    )
    return Dataset(alphabet, sequences)


@pytest.fixture
def make_dataset():
    """Factory for random datasets: make_dataset(rng, k, max_len, sigma, min_len=0)."""
    return random_dataset


@pytest.fixture
def rng():
    """Fixed-seed generator so failures are reproducible."""
    return np.random.default_rng(20240607)


@pytest.fixture(autouse=True)
def detach_log_handlers():
    """Drop handlers bound to a test's captured stderr once the test ends."""
    yield
    logger = logging.getLogger("dealcs")
    for handler in logger.handlers:
        handler.close()
    logger.handlers.clear()
    logger.setLevel(logging.WARNING)
