"""Tests for MF and MC deposition."""

import pytest

from dealcs.core.config import DepositionMethod
from dealcs.core.sequences import Dataset, is_common_subsequence
from dealcs.stages.deposition import DepositionConfig, FrontState, deposit
from dealcs.stages.templates import OriginKind

METHODS = (DepositionMethod.MF, DepositionMethod.MC)


def _deposit(dataset: Dataset, method: DepositionMethod, search_range: int) -> str:
    return dataset.decode(deposit(dataset, DepositionConfig(method, search_range)).body)


class TestDepositionConfig:
    """Tests for DepositionConfig validation."""

    def test_method_from_string(self):
        """Method names are coerced to DepositionMethod."""
        config = DepositionConfig("MC", 5)  # type: ignore[arg-type]
        assert config.method is DepositionMethod.MC

    def test_unknown_method(self):
        """Only MF and MC exist."""
        with pytest.raises(ValueError, match="MF or MC"):
            DepositionConfig("XX", 5)  # type: ignore[arg-type]

    def test_search_range_below_one(self):
        """L must be at least 1."""
        with pytest.raises(ValueError, match=">= 1"):
            DepositionConfig(DepositionMethod.MF, 0)

    def test_search_range_not_integer(self):
        """L must be an integer (bool excluded)."""
        with pytest.raises(TypeError, match="integer"):
            DepositionConfig(DepositionMethod.MF, 2.5)  # type: ignore[arg-type]
        with pytest.raises(TypeError, match="integer"):
            DepositionConfig(DepositionMethod.MF, True)


class TestDeposit:
    """Tests for deposit."""

    def test_identical_sequences_mf(self):
        """MF on identical sequences deposits the whole sequence."""
        dataset = Dataset.from_strings(["ACGT", "ACGT"])
        assert _deposit(dataset, DepositionMethod.MF, 4) == "ACGT"

    def test_disjoint_symbols(self):
        """No common symbol gives the empty template."""
        dataset = Dataset.from_strings(["AA", "BB"])
        for method in METHODS:
            assert _deposit(dataset, method, 2) == ""

    def test_small_example(self):
        """Both rules find AC on BAC / ABC."""
        dataset = Dataset.from_strings(["BAC", "ABC"], alphabet="ABC")
        for method in METHODS:
            assert _deposit(dataset, method, 3) == "AC"

    def test_window_miss_advances_fronts(self):
        """With L=1 the first step misses and only moves fronts forward."""
        dataset = Dataset.from_strings(["AB", "BA"])
        for method in METHODS:
            assert _deposit(dataset, method, 1) == "B"

    def test_empty_sequence(self):
        """An empty sequence stops deposition before the first step."""
        dataset = Dataset.from_strings(["ABC", ""], alphabet="ABC")
        for method in METHODS:
            assert _deposit(dataset, method, 3) == ""

    def test_origin(self):
        """The template records its rule and range."""
        dataset = Dataset.from_strings(["AB", "AB"])
        template = deposit(dataset, DepositionConfig(DepositionMethod.MC, 7))
        assert template.origin.kind is OriginKind.DEPOSITION
        assert template.origin.method is DepositionMethod.MC
        assert template.origin.search_range == 7

    def test_result_is_common_subsequence(self, rng, make_dataset):
        """Every deposition result is a common subsequence."""
        for _ in range(200):
            dataset = make_dataset(rng, int(rng.integers(1, 7)), 30, int(rng.choice([2, 4, 20])))
            for method in METHODS:
                for search_range in (1, 3, 10, 50):
                    template = deposit(dataset, DepositionConfig(method, search_range))
                    assert is_common_subsequence(template.body, dataset)

    def test_full_range_saturates(self, rng, make_dataset):
        """Any L at or above max_len gives the same template."""
        for _ in range(50):
            dataset = make_dataset(rng, 4, 20, 4, min_len=1)
            n = dataset.max_len
            for method in METHODS:
                full = deposit(dataset, DepositionConfig(method, n)).body
                assert deposit(dataset, DepositionConfig(method, n + 7)).body == full

    def test_identical_random_sequences_mf(self, rng, make_dataset):
        """MF with L = n recovers a sequence repeated k times."""
        for _ in range(50):
            seq = make_dataset(rng, 1, 25, 4, min_len=1).sequences[0]
            dataset = Dataset(make_dataset(rng, 1, 1, 4).alphabet, (seq,) * 3)
            assert deposit(dataset, DepositionConfig(DepositionMethod.MF, len(seq))).body == seq

    def test_deterministic(self, rng, make_dataset):
        """Same input gives the same template."""
        dataset = make_dataset(rng, 5, 40, 4)
        for method in METHODS:
            first = deposit(dataset, DepositionConfig(method, 5))
            assert deposit(dataset, DepositionConfig(method, 5)) == first


class TestFrontState:
    """Tests for FrontState."""

    def test_initial_and_progress(self):
        """Fronts start at zero and progress sums them."""
        dataset = Dataset.from_strings(["AB", "B"])
        state = FrontState.initial(dataset.index)
        assert state.fronts.tolist() == [0, 0]
        assert state.progress == 0
        assert state.running(dataset.index)
        state.fronts = state.fronts + [1, 1]
        assert state.progress == 2
        assert not state.running(dataset.index)
