"""Long Run: the longest single-symbol repetition common to all sequences."""

from dataclasses import dataclass

import numpy as np

from dealcs.core.sequences import Dataset, Sequence


@dataclass(frozen=True)
class LongRunResult:
    """Symbol and repetition count of a Long Run answer."""

    symbol: int
    m: int

    @property
    def cs(self) -> Sequence:
        """The common subsequence symbol^m (empty when m is 0)."""
        return Sequence((self.symbol,) * self.m)


def symbol_counts(dataset: Dataset) -> np.ndarray:
    """(k, sigma) matrix of per-sequence symbol counts."""
    return np.stack(
        [np.bincount(seq.as_array(), minlength=dataset.sigma) for seq in dataset.sequences]
    )


def long_run(dataset: Dataset) -> LongRunResult:
    """
    Find the largest m such that some symbol repeated m times is a common subsequence.

    m = max over symbols of the minimum per-sequence count; the first symbol in
    alphabet order reaching it is reported.

    Args:
        dataset: Problem instance

    Returns:
        LongRunResult (symbol is the first alphabet symbol when m is 0)
    """
    minimum = symbol_counts(dataset).min(axis=0)
    symbol = int(np.argmax(minimum))
    return LongRunResult(symbol, int(minimum[symbol]))
