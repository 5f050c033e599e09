"""
Next/previous occurrence tables over a dataset.

For every sequence i, position p and symbol c:

    next_at[i, p, c] = first q >= p with S_i[q] == c, else len(S_i)
    prev_at[i, p, c] = last q < p with S_i[q] == c, else -1

Tables are padded to max_len + 2 rows so that a failed forward match
(position len(S_i) + 1) can still be looked up; it stays failed.
All per-sequence work (deposition fronts, end-extension checks, run growth)
is then one numpy gather across the k sequences.

Memory is two int32 tables of k x (max_len + 2) x sigma entries, about
8 * k * max_len * sigma bytes. Raw byte inputs (sigma up to 256) over long
files grow quickly: k = 100, max_len = 100_000 and sigma = 256 need about
20 GB. Declare a smaller alphabet with drop_unknown, or truncate, for such
inputs.
"""

from collections.abc import Iterable

import numpy as np

from dealcs.core.sequences import Dataset
from dealcs.utils.logging import get_logger


class SubsequenceIndex:
    """Occurrence tables for fast common-subsequence checks on one dataset."""

    def __init__(self, dataset: Dataset):
        """
        Build the tables.

        Args:
            dataset: Problem instance to index
        """
        self.k = dataset.k
        self.sigma = dataset.sigma
        self.lengths = np.asarray(dataset.lengths, dtype=np.int64)
        self.rows = np.arange(self.k)
        width = dataset.max_len

        # Padding symbol is sigma so front counts can bincount into an ignored bucket
        self.matrix = np.full((self.k, width + 1), self.sigma, dtype=np.int64)
        for i, seq in enumerate(dataset.sequences):
            self.matrix[i, : len(seq)] = seq.as_array()

        self.next_at = np.empty((self.k, width + 2, self.sigma), dtype=np.int32)
        self.next_at[:] = self.lengths[:, None, None]
        for p in range(width - 1, -1, -1):
            self.next_at[:, p, :] = self.next_at[:, p + 1, :]
            live = self.lengths > p
            self.next_at[self.rows[live], p, self.matrix[live, p]] = p

        self.prev_at = np.full((self.k, width + 2, self.sigma), -1, dtype=np.int32)
        for p in range(1, width + 2):
            self.prev_at[:, p, :] = self.prev_at[:, p - 1, :]
            live = self.lengths > p - 1
            self.prev_at[self.rows[live], p, self.matrix[live, p - 1]] = p - 1
        get_logger().debug(
            f"index k={self.k} sigma={self.sigma} max_len={width}: {self.nbytes / 2**20:.1f} MiB"
        )

    @property
    def nbytes(self) -> int:
        """Bytes held by the occurrence tables."""
        return int(self.next_at.nbytes + self.prev_at.nbytes)

    # ------------------------------------------------------------------
    # Greedy matching
    # ------------------------------------------------------------------

    def start(self) -> np.ndarray:
        """Forward positions of the empty prefix (all zeros)."""
        return np.zeros(self.k, dtype=np.int64)

    def end(self) -> np.ndarray:
        """Backward start positions of the empty suffix (the sequence lengths)."""
        return self.lengths.copy()

    def advance(self, positions: np.ndarray, symbol: int) -> np.ndarray:
        """Match one more symbol greedily from the left; returns positions after the match."""
        return self.next_at[self.rows, positions, symbol] + 1

    def retreat(self, starts: np.ndarray, symbol: int) -> np.ndarray:
        """Match one more symbol greedily from the right; returns the new start positions."""
        return self.prev_at[self.rows, np.maximum(starts, 0), symbol]

    def forward(self, symbols: Iterable[int]) -> np.ndarray:
        """Left-greedy end positions of ``symbols`` in every sequence (> length on failure)."""
        positions = self.start()
        for symbol in symbols:
            positions = self.advance(positions, symbol)
        return positions

    def backward(self, symbols: Iterable[int]) -> np.ndarray:
        """Right-greedy start positions of ``symbols`` in every sequence (-1 on failure)."""
        starts = self.end()
        for symbol in reversed(tuple(symbols)):
            starts = self.retreat(starts, symbol)
        return starts

    def matched(self, positions: np.ndarray) -> np.ndarray:
        """Boolean mask of sequences where a forward match succeeded."""
        return positions <= self.lengths

    def is_common(self, symbols: Iterable[int]) -> bool:
        """Check whether ``symbols`` is a common subsequence of the indexed dataset."""
        return bool(self.matched(self.forward(symbols)).all())

    # ------------------------------------------------------------------
    # End extension
    # ------------------------------------------------------------------

    def appendable(self, positions: np.ndarray) -> np.ndarray:
        """Mask over symbols that occur at or after ``positions`` in every sequence."""
        found = self.next_at[self.rows, positions, :] < self.lengths[:, None]
        return found.all(axis=0)

    def prependable(self, starts: np.ndarray) -> np.ndarray:
        """Mask over symbols that occur before ``starts`` in every sequence."""
        found = self.prev_at[self.rows, np.maximum(starts, 0), :] >= 0
        return found.all(axis=0)

    # ------------------------------------------------------------------
    # Deposition fronts
    # ------------------------------------------------------------------

    def front_symbols(self, fronts: np.ndarray) -> np.ndarray:
        """Symbol at every front (sigma for a finished sequence)."""
        return self.matrix[self.rows, np.minimum(fronts, self.matrix.shape[1] - 1)]

    def front_counts(self, fronts: np.ndarray) -> np.ndarray:
        """How many unfinished fronts show each symbol."""
        return np.bincount(self.front_symbols(fronts), minlength=self.sigma + 1)[: self.sigma]

    def first_occurrences(self, fronts: np.ndarray) -> np.ndarray:
        """(k, sigma) matrix of first occurrence of every symbol at or after the fronts."""
        return self.next_at[self.rows, fronts, :]

    def window_limits(self, fronts: np.ndarray, search_range: int) -> np.ndarray:
        """Exclusive end of each search window: the next ``search_range`` characters."""
        return np.minimum(fronts + search_range, self.lengths)
