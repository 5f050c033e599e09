"""
Upper bound on the LCS length from a subset of the sequences.

The LCS of any subset is at least as long as the LCS of the whole set, so
an exact LCS over a well-chosen subset bounds the answer from above. The
subset favours sequences rich in the most frequent symbols: symbols are
visited by descending content and each contributes the sequence holding the
most copies of it.
"""

from dataclasses import dataclass
from typing import Optional

import numpy as np

from dealcs.core.config import DEFAULT_CELL_BUDGET
from dealcs.core.sequences import Dataset, alphabet_content

from .exact import lcs_k, table_cells
from .longrun import symbol_counts
from .pairwise import lcs_length


@dataclass(frozen=True)
class BoundsReport:
    """Upper bound, the sequences it was computed on, and the exact LCS length if known."""

    upper_bound: int
    chosen_sequence_indices: tuple[int, ...]
    exact: Optional[int] = None


def choose_sequences(dataset: Dataset) -> list[int]:
    """
    Pick up to min(|Σ|, k) sequence indices for the bound.

    Symbols are visited by descending content (ties by alphabet order). Each
    symbol selects the sequence with the most occurrences of it (lowest
    index on ties) unless that sequence is already chosen, in which case the
    symbol is skipped. Remaining slots are filled with the shortest unchosen
    sequences.
    """
    target = min(dataset.sigma, dataset.k)
    counts = symbol_counts(dataset)
    chosen: list[int] = []
    for symbol in alphabet_content(dataset).ranked():
        if len(chosen) >= target:
            break
        best = int(np.argmax(counts[:, symbol]))
        if best not in chosen:
            chosen.append(best)

    if len(chosen) < target:
        rest = sorted(
            (i for i in range(dataset.k) if i not in chosen),
            key=lambda i: (len(dataset.sequences[i]), i),
        )
        chosen.extend(rest[: target - len(chosen)])
    return chosen


def upper_bound(
    dataset: Dataset,
    cell_budget: int = DEFAULT_CELL_BUDGET,
    compute_exact: bool = False,
) -> BoundsReport:
    """
    Compute an upper bound on the LCS length.

    The last-chosen sequences are dropped until the k-way table fits the
    budget (two sequences are always kept when k >= 2; their bound uses the
    linear-memory pairwise length).

    Args:
        dataset: Problem instance
        cell_budget: Maximum cells for the k-way dynamic program
        compute_exact: Also compute the exact LCS length when the full table fits

    Returns:
        BoundsReport
    """
    if dataset.total_length == 0:
        return BoundsReport(0, (), 0 if compute_exact else None)

    chosen = choose_sequences(dataset)
    while len(chosen) > 2 and table_cells(dataset.lengths[i] for i in chosen) > cell_budget:
        chosen.pop()

    subset = dataset.subset(chosen)
    if subset.k == 1:
        bound = len(subset.sequences[0])
    elif subset.k == 2:
        bound = lcs_length(subset.sequences[0], subset.sequences[1])
    else:
        bound = len(lcs_k(subset, cell_budget))

    exact = None
    if compute_exact and table_cells(dataset.lengths) <= cell_budget:
        exact = len(lcs_k(dataset, cell_budget))

    return BoundsReport(bound, tuple(chosen), exact)
