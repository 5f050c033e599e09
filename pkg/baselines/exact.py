"""
Exact LCS oracles.

lcs_k runs the k-dimensional dynamic program over the full table of
prod(len(S_i) + 1) cells. The last axis is filled one vector at a time:

    candidate[j] = max over head axes d of table[x - e_d, j]
    candidate[j] = table[x - 1, j - 1] + 1   where every S_i agrees at x, j
    table[x, 1:] = running maximum of candidate

brute_force_lcs enumerates subsequences of the shortest sequence, longest
first, and is meant for tests on tiny instances only.
"""

import math
from itertools import combinations, product

import numpy as np

from dealcs.core.config import DEFAULT_CELL_BUDGET
from dealcs.core.exceptions import BruteForceLimitError, BudgetExceededError
from dealcs.core.sequences import Dataset, Sequence, is_common_subsequence
from dealcs.utils.logging import get_logger

# Brute force refuses shortest sequences longer than this by default
DEFAULT_BRUTE_FORCE_LIMIT = 20

_UINT16_MAX = np.iinfo(np.uint16).max


def table_cells(lengths) -> int:
    """Number of cells in the k-way table for sequences of the given lengths."""
    return math.prod(int(n) + 1 for n in lengths)


def check_budget(dataset: Dataset, cell_budget: int = DEFAULT_CELL_BUDGET) -> int:
    """
    Check the k-way table size against a cell budget.

    Returns:
        The number of cells

    Raises:
        BudgetExceededError: If the table would exceed ``cell_budget`` cells.
    """
    cells = table_cells(dataset.lengths)
    if cells > cell_budget:
        raise BudgetExceededError(
            f"instance too large for exact DP: {cells} cells (budget {cell_budget})",
            cells=cells,
            budget=cell_budget,
        )
    return cells


def lcs_table_k(dataset: Dataset, cell_budget: int = DEFAULT_CELL_BUDGET) -> np.ndarray:
    """
    Fill the k-way LCS length table.

    Args:
        dataset: Problem instance with k >= 2
        cell_budget: Maximum number of table cells

    Returns:
        Array of shape (len(S_1)+1, ..., len(S_k)+1)

    Raises:
        BudgetExceededError: If the table exceeds the budget.
        ValueError: If the dataset has a single sequence.
    """
    if dataset.k < 2:
        raise ValueError("k-way table needs at least 2 sequences")
    check_budget(dataset, cell_budget)

    arrays = [seq.as_array() for seq in dataset.sequences]
    head, last = arrays[:-1], arrays[-1]
    dtype = np.uint16 if dataset.min_len <= _UINT16_MAX else np.uint32
    table = np.zeros(tuple(len(a) + 1 for a in arrays), dtype=dtype)
    if dataset.min_len == 0:
        return table

    for x in product(*(range(1, len(a) + 1) for a in head)):
        candidate = table[(x[0] - 1, *x[1:])][1:]
        for d in range(1, len(x)):
            shifted = x[:d] + (x[d] - 1,) + x[d + 1 :]
            candidate = np.maximum(candidate, table[shifted][1:])

        symbols = {int(a[i - 1]) for a, i in zip(head, x)}
        if len(symbols) == 1:
            symbol = symbols.pop()
            diagonal = table[tuple(i - 1 for i in x)][:-1] + 1
            candidate = np.where(last == symbol, diagonal, candidate)

        np.maximum.accumulate(candidate, out=table[x][1:])

    return table


def lcs_k(dataset: Dataset, cell_budget: int = DEFAULT_CELL_BUDGET) -> Sequence:
    """
    Exact LCS of all sequences by the k-dimensional dynamic program.

    Traceback: when all sequences agree at the current cell the symbol is
    taken; otherwise the first axis whose predecessor keeps the length is
    stepped. For k = 2 this matches lcs2 exactly.

    Args:
        dataset: Problem instance
        cell_budget: Maximum number of table cells

    Returns:
        An LCS of the dataset

    Raises:
        BudgetExceededError: If the table exceeds the budget.
    """
    if dataset.k == 1:
        return dataset.sequences[0]

    table = lcs_table_k(dataset, cell_budget)
    arrays = [seq.as_array() for seq in dataset.sequences]
    x = [len(a) for a in arrays]
    out: list[int] = []
    while all(i > 0 for i in x):
        symbols = {int(a[i - 1]) for a, i in zip(arrays, x)}
        if len(symbols) == 1:
            out.append(symbols.pop())
            x = [i - 1 for i in x]
            continue
        here = table[tuple(x)]
        for d in range(len(x)):
            x[d] -= 1
            if table[tuple(x)] == here:
                break
            x[d] += 1
    out.reverse()

    get_logger().debug(f"lcs_k: k={dataset.k} cells={table.size} length={len(out)}")
    return Sequence(tuple(out))


def brute_force_lcs(dataset: Dataset, max_len: int = DEFAULT_BRUTE_FORCE_LIMIT) -> Sequence:
    """
    Exhaustive LCS for tiny instances.

    Subsequences of the shortest sequence are tried longest first, in
    index-combination order; the first common one is returned.

    Args:
        dataset: Problem instance
        max_len: Largest shortest-sequence length to enumerate

    Returns:
        An LCS of the dataset

    Raises:
        BruteForceLimitError: If the shortest sequence is longer than ``max_len``.
    """
    shortest = min(dataset.sequences, key=len)
    if len(shortest) > max_len:
        raise BruteForceLimitError(
            f"shortest sequence has {len(shortest)} symbols, brute force limit is {max_len}",
            length=len(shortest),
            limit=max_len,
        )

    symbols = tuple(shortest)
    for size in range(len(symbols), -1, -1):
        seen: set[tuple[int, ...]] = set()
        for positions in combinations(range(len(symbols)), size):
            candidate = tuple(symbols[p] for p in positions)
            if candidate in seen:
                continue
            seen.add(candidate)
            if is_common_subsequence(candidate, dataset):
                return Sequence(candidate)
    return Sequence()
