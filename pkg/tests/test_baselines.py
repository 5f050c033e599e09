"""Tests for Long Run, the pairwise heuristics and the exact oracles."""

import pytest

from dealcs.baselines.exact import (
    brute_force_lcs,
    check_budget,
    lcs_k,
    lcs_table_k,
    table_cells,
)
from dealcs.baselines.longrun import long_run, symbol_counts
from dealcs.baselines.pairwise import greedy, lcs2, lcs_length, lcs_table, tournament
from dealcs.core.exceptions import BruteForceLimitError, BudgetExceededError
from dealcs.core.sequences import Dataset, Sequence, is_common_subsequence


def _decode(dataset: Dataset, seq: Sequence) -> str:
    return dataset.decode(seq)


class TestLongRun:
    """Tests for long_run."""

    def test_examples(self):
        """Hand-checked Long Run answers."""
        dataset = Dataset.from_strings(["AAB", "ABA", "BAA"])
        result = long_run(dataset)
        assert dataset.decode(result.cs) == "AA"
        assert result.m == 2

        dataset = Dataset.from_strings(["ACAC", "CACA"])
        assert long_run(dataset).m == 2
        assert dataset.decode(long_run(dataset).cs) == "AA"

    def test_disjoint(self):
        """No common symbol gives m = 0 and an empty result."""
        result = long_run(Dataset.from_strings(["AA", "BB"]))
        assert result.m == 0
        assert len(result.cs) == 0

    def test_counts(self):
        """Per-sequence counts form a (k, sigma) matrix."""
        counts = symbol_counts(Dataset.from_strings(["AAB", "B"]))
        assert counts.tolist() == [[2, 1], [0, 1]]

    def test_maximal_and_monotone(self, rng, make_dataset):
        """symbol^m is common, symbol^(m+1) is not, and adding a sequence never raises m."""
        for _ in range(200):
            dataset = make_dataset(rng, int(rng.integers(1, 6)), 20, int(rng.choice([2, 4, 20])))
            result = long_run(dataset)
            assert is_common_subsequence(result.cs, dataset)
            for symbol in range(dataset.sigma):
                assert not is_common_subsequence((symbol,) * (result.m + 1), dataset)
            extra = make_dataset(rng, 1, 20, dataset.sigma).sequences[0]
            bigger = Dataset(dataset.alphabet, dataset.sequences + (extra,))
            assert long_run(bigger).m <= result.m


class TestPairwise:
    """Tests for lcs2, lcs_length and lcs_table."""

    def test_classic_example(self):
        """ABCBDAB / BDCABA has LCS length 4."""
        dataset = Dataset.from_strings(["ABCBDAB", "BDCABA"])
        s, t = dataset.sequences
        result = lcs2(s, t)
        assert len(result) == 4
        assert lcs_length(s, t) == 4
        assert is_common_subsequence(result, dataset)

    def test_identity_and_empty(self):
        """LCS of a sequence with itself and with the empty sequence."""
        s = Sequence((0, 1, 1, 0, 2))
        assert lcs2(s, s) == s
        assert lcs2(s, Sequence()) == Sequence()
        assert lcs_length(Sequence(), s) == 0

    def test_table_shape(self):
        """The table has one extra row and column."""
        table = lcs_table((0, 1), (1, 0, 1))
        assert table.shape == (3, 4)
        assert int(table[-1, -1]) == 2

    def test_matches_brute_force(self, rng, make_dataset):
        """lcs2 is optimal on random pairs."""
        for _ in range(500):
            dataset = make_dataset(rng, 2, 10, int(rng.choice([2, 4])))
            s, t = dataset.sequences
            result = lcs2(s, t)
            assert is_common_subsequence(result, dataset)
            assert len(result) == len(brute_force_lcs(dataset)) == lcs_length(s, t)


class TestMerging:
    """Tests for greedy and tournament."""

    def test_two_sequences_equal_lcs2(self):
        """With two sequences both heuristics return lcs2."""
        dataset = Dataset.from_strings(["ABCBDAB", "BDCABA"])
        expected = lcs2(*dataset.sequences)
        assert greedy(dataset) == expected
        assert tournament(dataset) == expected

    def test_identical(self):
        """Identical sequences merge to themselves."""
        dataset = Dataset.from_strings(["AAA", "AAA", "AAA"])
        assert _decode(dataset, greedy(dataset)) == "AAA"
        assert _decode(dataset, tournament(dataset)) == "AAA"

    def test_single_sequence(self):
        """One sequence is its own answer."""
        dataset = Dataset.from_strings(["ABBA"])
        assert _decode(dataset, greedy(dataset)) == "ABBA"
        assert _decode(dataset, tournament(dataset)) == "ABBA"

    def test_greedy_merges_best_pair_first(self):
        """The closest pair is merged first."""
        dataset = Dataset.from_strings(["AB", "AB", "BA"])
        assert len(greedy(dataset)) == 1

    def test_tournament_odd_leftover(self):
        """An odd sequence passes to the next round unchanged."""
        dataset = Dataset.from_strings(["ABC", "ABC", "AC"])
        assert _decode(dataset, tournament(dataset)) == "AC"

    def test_always_common(self, rng, make_dataset):
        """Both heuristics return common subsequences."""
        for _ in range(200):
            dataset = make_dataset(rng, int(rng.integers(1, 7)), 20, int(rng.choice([2, 4, 20])))
            assert is_common_subsequence(greedy(dataset), dataset)
            assert is_common_subsequence(tournament(dataset), dataset)


class TestExact:
    """Tests for lcs_k and brute_force_lcs."""

    def test_examples(self):
        """Hand-checked exact answers."""
        assert len(lcs_k(Dataset.from_strings(["BAC", "ABC", "ACB"]))) == 2
        assert len(lcs_k(Dataset.from_strings(["aab", "aba", "baa"]))) == 2
        dataset = Dataset.from_strings(["ACGT", "ACGT", "ACGT"])
        assert dataset.decode(lcs_k(dataset)) == "ACGT"

    def test_single_and_empty(self):
        """k = 1 returns the sequence; an empty sequence forces length 0."""
        dataset = Dataset.from_strings(["ABA"])
        assert dataset.decode(lcs_k(dataset)) == "ABA"
        assert len(lcs_k(Dataset.from_strings(["AB", ""], alphabet="AB"))) == 0

    def test_two_way_traceback_matches_lcs2(self, rng, make_dataset):
        """For k = 2 the k-way traceback picks the same LCS as lcs2."""
        for _ in range(100):
            dataset = make_dataset(rng, 2, 12, 4)
            assert lcs_k(dataset) == lcs2(*dataset.sequences)

    def test_matches_brute_force(self, rng, make_dataset):
        """lcs_k is optimal on random small instances."""
        for _ in range(500):
            dataset = make_dataset(rng, int(rng.integers(1, 4)), 10, int(rng.choice([2, 4])))
            result = lcs_k(dataset)
            assert is_common_subsequence(result, dataset)
            assert len(result) == len(brute_force_lcs(dataset))

    def test_lcs_within_sigma_of_long_run(self, rng, make_dataset):
        """The optimum is at most sigma times the Long Run length."""
        for _ in range(200):
            dataset = make_dataset(rng, 3, 10, int(rng.choice([2, 4])))
            assert len(lcs_k(dataset)) <= dataset.sigma * max(1, long_run(dataset).m)

    def test_table_cells(self):
        """Cell count is the product of (length + 1)."""
        assert table_cells([2, 3, 0]) == 12
        dataset = Dataset.from_strings(["AB", "ABC"])
        assert check_budget(dataset, 12) == 12

    def test_budget_exceeded(self):
        """Tables over budget are refused with the cell count."""
        dataset = Dataset.from_strings(["ABAB", "BABA", "AABB"])
        with pytest.raises(BudgetExceededError, match="instance too large") as excinfo:
            lcs_k(dataset, cell_budget=100)
        assert excinfo.value.cells == 125
        assert excinfo.value.budget == 100

    def test_table_needs_two_sequences(self):
        """The k-way table is for k >= 2."""
        with pytest.raises(ValueError, match="at least 2"):
            lcs_table_k(Dataset.from_strings(["AB"]))

    def test_brute_force_examples(self):
        """Brute force on tiny instances."""
        dataset = Dataset.from_strings(["ACAC", "CACA"])
        assert len(brute_force_lcs(dataset)) == 3
        assert len(brute_force_lcs(Dataset.from_strings(["AA", "BB"]))) == 0

    def test_brute_force_limit(self):
        """Brute force refuses long shortest sequences."""
        dataset = Dataset.from_strings(["A" * 6, "A" * 7])
        with pytest.raises(BruteForceLimitError, match="limit is 5") as excinfo:
            brute_force_lcs(dataset, max_len=5)
        assert excinfo.value.length == 6
