"""
Pairwise LCS and the pair-merging heuristics built on it.

lcs2 fills the classic (|s|+1) x (|t|+1) length table one numpy row at a
time and traces back deterministically:

    match at (i, j)              -> take it (diagonal)
    table[i-1, j] >= table[i, j-1] -> drop a character of s
    otherwise                    -> drop a character of t

Greedy and Tournament reduce k sequences to one by repeatedly replacing a
pair with its LCS; the survivor is a common subsequence of every input.
"""

from collections.abc import Iterable

import numpy as np

from dealcs.core.sequences import Dataset, Sequence
from dealcs.utils.logging import get_logger


def _as_array(seq: Iterable[int]) -> np.ndarray:
    if isinstance(seq, Sequence):
        return seq.as_array()
    return np.asarray(tuple(seq), dtype=np.int64)


def _next_row(prev: np.ndarray, symbol: int, t: np.ndarray) -> np.ndarray:
    """Row i of the length table from row i-1 and the i-th symbol of s."""
    row = np.empty_like(prev)
    row[0] = 0
    candidate = np.where(t == symbol, prev[:-1] + 1, prev[1:])
    np.maximum.accumulate(candidate, out=row[1:])
    return row


def lcs_table(s: Iterable[int], t: Iterable[int]) -> np.ndarray:
    """
    Full LCS length table of two sequences.

    Returns:
        uint32 array of shape (len(s) + 1, len(t) + 1)
    """
    a, b = _as_array(s), _as_array(t)
    table = np.zeros((len(a) + 1, len(b) + 1), dtype=np.uint32)
    for i, symbol in enumerate(a, start=1):
        table[i] = _next_row(table[i - 1], symbol, b)
    return table


def lcs_length(s: Iterable[int], t: Iterable[int]) -> int:
    """Length of an LCS of two sequences in linear memory."""
    a, b = _as_array(s), _as_array(t)
    if len(a) < len(b):
        a, b = b, a
    row = np.zeros(len(b) + 1, dtype=np.uint32)
    for symbol in a:
        row = _next_row(row, symbol, b)
    return int(row[-1])


def lcs2(s: Iterable[int], t: Iterable[int]) -> Sequence:
    """
    Longest common subsequence of two sequences.

    Args:
        s: First sequence (codes)
        t: Second sequence (codes)

    Returns:
        An LCS; the traceback prefers a match, then dropping from ``s``
    """
    a, b = _as_array(s), _as_array(t)
    table = lcs_table(a, b)
    i, j = len(a), len(b)
    out: list[int] = []
    while i > 0 and j > 0:
        if a[i - 1] == b[j - 1]:
            out.append(int(a[i - 1]))
            i -= 1
            j -= 1
        elif table[i - 1, j] >= table[i, j - 1]:
            i -= 1
        else:
            j -= 1
    out.reverse()
    return Sequence(tuple(out))


def greedy(dataset: Dataset) -> Sequence:
    """
    Greedy pair merging.

    While more than one sequence remains, the pair with the longest LCS is
    replaced by that LCS (ties go to the smallest index pair (i, j)); the
    merged sequence takes position i.

    Args:
        dataset: Problem instance

    Returns:
        The surviving sequence, a common subsequence of the dataset
    """
    # Pair lengths are cached by sequence identity across rounds
    items: list[tuple[int, Sequence]] = list(enumerate(dataset.sequences))
    next_uid = len(items)
    lengths: dict[tuple[int, int], int] = {}

    def pair_length(i: int, j: int) -> int:
        key = (items[i][0], items[j][0])
        if key not in lengths:
            lengths[key] = lcs_length(items[i][1], items[j][1])
        return lengths[key]

    while len(items) > 1:
        _, i, j = min(
            (-pair_length(i, j), i, j)
            for i in range(len(items))
            for j in range(i + 1, len(items))
        )
        merged = lcs2(items[i][1], items[j][1])
        items[i] = (next_uid, merged)
        next_uid += 1
        del items[j]

    return items[0][1]


def tournament(dataset: Dataset) -> Sequence:
    """
    Tournament pair merging.

    Each round pairs adjacent sequences (1,2), (3,4), ... and replaces every
    pair with its LCS; an odd leftover passes through unchanged.

    Args:
        dataset: Problem instance

    Returns:
        The surviving sequence, a common subsequence of the dataset
    """
    current = list(dataset.sequences)
    rounds = 0
    while len(current) > 1:
        merged = [lcs2(current[i], current[i + 1]) for i in range(0, len(current) - 1, 2)]
        if len(current) % 2:
            merged.append(current[-1])
        current = merged
        rounds += 1
    get_logger().debug(f"tournament: {rounds} rounds, result length {len(current[0])}")
    return current[0]
