"""Tests for the DEA solver and algorithm dispatch."""

import pytest

from dealcs.baselines.exact import lcs_k, table_cells
from dealcs.baselines.longrun import long_run
from dealcs.core.config import Algorithm, DEAConfig, DepositionMethod, PoolMode
from dealcs.core.exceptions import BudgetExceededError
from dealcs.core.sequences import Dataset, is_common_subsequence
from dealcs.core.solver import DEASolver, config_for, dea_solve, solve_with
from dealcs.stages.templates import OriginKind

# Exact DP is only run on guarantee instances below this many cells
_EXACT_CELLS = 200_000


class TestDEASolver:
    """Tests for DEASolver and dea_solve."""

    def test_repeated_symbol(self):
        """Identical unary sequences are solved completely."""
        dataset = Dataset.from_strings(["AAA", "AAA"])
        assert dataset.decode(dea_solve(dataset).cs) == "AAA"

    def test_alternating(self):
        """ACAC / CACA: DEA finds length 3 where Long Run finds 2."""
        dataset = Dataset.from_strings(["ACAC", "CACA"])
        result = dea_solve(dataset)
        assert dataset.decode(result.cs) == "ACA"
        assert result.origin is not None
        assert result.origin.kind is OriginKind.DEPOSITION
        assert result.origin.method is DepositionMethod.MF
        assert result.search_range_used == 4
        assert result.search_ranges == (4, 2, 1)
        assert long_run(dataset).m == 2

    def test_three_sequences(self):
        """aab / aba / baa has LCS aa."""
        dataset = Dataset.from_strings(["aab", "aba", "baa"])
        assert dataset.decode(dea_solve(dataset).cs) == "aa"

    def test_disjoint(self):
        """No common symbol gives an empty result."""
        dataset = Dataset.from_strings(["AA", "BB"])
        result = dea_solve(dataset)
        assert result.length == 0
        assert result.cs == dataset.alphabet.encode("")

    def test_empty_sequence(self):
        """An empty sequence forces the empty result."""
        dataset = Dataset.from_strings(["ABC", ""], alphabet="ABC")
        assert dea_solve(dataset).length == 0

    def test_single_range_override(self):
        """An explicit L replaces the sweep."""
        dataset = Dataset.from_strings(["ACGTAC", "AGTCCA"])
        result = dea_solve(dataset, search_range=3)
        assert result.search_ranges == (3,)

    def test_search_range_sweep_is_capped(self):
        """Long sequences sweep only the capped range."""
        dataset = Dataset.from_strings(["A" * 1000, "A" * 1000])
        assert DEASolver().search_ranges(dataset) == (50,)

    def test_no_extension_reports_template(self):
        """With extension off the raw template wins."""
        dataset = Dataset.from_strings(["ABAB", "BABA", "ABBA"])
        result = DEASolver(DEAConfig(extension=False)).solve(dataset)
        assert result.template_length == result.length
        assert is_common_subsequence(result.cs, dataset)

    def test_template_length_not_above_result(self, rng, make_dataset):
        """The winning template is never longer than the result."""
        for _ in range(30):
            dataset = make_dataset(rng, 4, 20, 4)
            result = dea_solve(dataset)
            assert result.template_length is not None
            assert result.template_length <= result.length
            assert result.pool_size >= 1

    def test_workers_do_not_change_result(self, rng, make_dataset):
        """Threaded extension gives the same answer."""
        dataset = make_dataset(rng, 6, 40, 4)
        single = DEASolver(DEAConfig()).solve(dataset)
        threaded = DEASolver(DEAConfig(workers=3)).solve(dataset)
        assert threaded.cs == single.cs
        assert threaded.origin == single.origin

    def test_deterministic(self, rng, make_dataset):
        """Repeated solves agree."""
        dataset = make_dataset(rng, 5, 30, 4)
        assert dea_solve(dataset).cs == dea_solve(dataset).cs

    def test_basic_pool_matches_long_run(self, rng, make_dataset):
        """A basic-only pool is never below Long Run."""
        for _ in range(30):
            dataset = make_dataset(rng, 5, 30, 4)
            result = DEASolver(DEAConfig(pool_mode=PoolMode.BASIC)).solve(dataset)
            assert result.length >= long_run(dataset).m

    def test_invalid_config(self):
        """The solver validates its configuration."""
        with pytest.raises(ValueError, match="search_range"):
            DEASolver(DEAConfig(search_range=0))


class TestSolveWith:
    """Tests for solve_with and config_for."""

    def setup_method(self):
        """Small three-sequence dataset."""
        self.dataset = Dataset.from_strings(["aab", "aba", "baa"])

    def test_every_algorithm(self):
        """Every algorithm returns a valid result named after itself."""
        for algorithm in Algorithm:
            result = solve_with(self.dataset, algorithm)
            assert result.algorithm == algorithm.value
            assert is_common_subsequence(result.cs, self.dataset)
        assert solve_with(self.dataset, "longrun").length == 2
        assert solve_with(self.dataset, "exact").length == 2

    def test_baselines_have_no_origin(self):
        """Only DEA variants report provenance."""
        result = solve_with(self.dataset, Algorithm.GREEDY)
        assert result.origin is None
        assert result.search_range_used is None

    def test_unknown_algorithm(self):
        """Unknown names list the valid ones."""
        with pytest.raises(ValueError, match="Unknown algorithm"):
            solve_with(self.dataset, "quantum")

    def test_exact_over_budget(self):
        """The exact oracle refuses tables over budget."""
        with pytest.raises(BudgetExceededError):
            solve_with(self.dataset, "exact", DEAConfig(cell_budget=10))

    def test_config_for_variants(self):
        """Variants restrict the rule or fix L = max_len."""
        base = DEAConfig()
        assert config_for("dea-mf", self.dataset, base).methods == (DepositionMethod.MF,)
        assert config_for("dea-mc", self.dataset, base).methods == (DepositionMethod.MC,)
        full = config_for("dea-full-range", self.dataset, base)
        assert full.methods == (DepositionMethod.MC,)
        assert full.search_range == 3
        assert base.search_range is None


class TestGuarantees:
    """Validity and ratio guarantees over random instances."""

    def test_guarantee_suite(self, rng, make_dataset):
        """Valid outputs, DEA >= Long Run, and DEA within sigma of optimal."""
        checked_exact = 0
        for _ in range(500):
            k = int(rng.integers(1, 9))
            sigma = int(rng.choice([2, 4, 20]))
            dataset = make_dataset(rng, k, int(rng.integers(1, 41)), sigma)

            dea = dea_solve(dataset)
            assert is_common_subsequence(dea.cs, dataset)
            lr = long_run(dataset)
            assert is_common_subsequence(lr.cs, dataset)
            assert dea.length >= lr.m

            for algorithm in ("dea-mf", "dea-mc", "greedy", "tournament"):
                assert is_common_subsequence(solve_with(dataset, algorithm).cs, dataset)

            if table_cells(dataset.lengths) <= _EXACT_CELLS:
                opt = len(lcs_k(dataset))
                checked_exact += 1
                assert dea.length <= opt
                if lr.m > 0:
                    assert opt <= dataset.sigma * dea.length
        assert checked_exact >= 100
