"""Tests for the seeded dataset generators."""

import numpy as np
import pytest

from dealcs.core.exceptions import GeneratorSpecError
from dealcs.core.sequences import alphabet_content
from dealcs.datagen.generators import (
    Distribution,
    GenSpec,
    generate,
    generate_batch,
    symbol_labels,
    symbol_probabilities,
)


class TestGenSpec:
    """Tests for GenSpec validation."""

    def test_normalizes(self):
        """Distribution names are coerced."""
        spec = GenSpec(3, 10, 4, "beta_skew", seed=1, beta=0.2)
        spec.validate()
        assert spec.distribution is Distribution.BETA_SKEW
        assert spec.label == "beta_skew-k3-n10-s4-b0.2"

    @pytest.mark.parametrize(
        "kwargs,field",
        [
            ({"k": 0, "n": 5, "sigma": 4}, "k"),
            ({"k": 2, "n": 0, "sigma": 4}, "n"),
            ({"k": 2, "n": 5, "sigma": 0}, "sigma"),
            ({"k": 2, "n": 5, "sigma": 4, "distribution": "zipf"}, "distribution"),
            ({"k": 2, "n": 5, "sigma": 4, "seed": -1}, "seed"),
            ({"k": 2, "n": 5, "sigma": 4, "seed": 2**64}, "seed"),
            ({"k": 2, "n": 5, "sigma": 3, "distribution": "beta_skew", "beta": 0.2}, "sigma"),
            ({"k": 2, "n": 5, "sigma": 4, "distribution": "beta_skew"}, "beta"),
            ({"k": 2, "n": 5, "sigma": 4, "distribution": "beta_skew", "beta": 1.0}, "beta"),
        ],
    )
    def test_invalid(self, kwargs, field):
        """Each invalid field is named in the error."""
        with pytest.raises(GeneratorSpecError) as excinfo:
            generate(GenSpec(**kwargs))
        assert excinfo.value.field == field


class TestGenerate:
    """Tests for generate and generate_batch."""

    def test_shape_and_labels(self):
        """k sequences of length n over the generated labels."""
        dataset = generate(GenSpec(5, 12, 4, seed=9))
        assert dataset.k == 5
        assert dataset.lengths == (12,) * 5
        assert dataset.alphabet.symbols == ("A", "B", "C", "D")
        assert dataset.name == "uniform-k5-n12-s4-seed9"

    def test_labels_beyond_letters(self):
        """Large alphabets continue past A-Z, a-z and 0-9."""
        alphabet = symbol_labels(70)
        assert alphabet.symbols[:3] == ("A", "B", "C")
        assert alphabet.symbols[26] == "a"
        assert alphabet.symbols[52] == "0"
        assert alphabet.symbols[62] == "\u0100"
        assert len(set(alphabet.symbols)) == 70

    def test_deterministic(self):
        """The same spec gives the same dataset, another seed a different one."""
        spec = GenSpec(4, 30, 4, "random_contents", seed=123)
        assert generate(spec) == generate(spec)
        assert generate(GenSpec(4, 30, 4, "random_contents", seed=124)) != generate(spec)

    def test_spec_not_mutated(self):
        """generate validates a copy."""
        spec = GenSpec(2, 5, 4, "uniform")
        generate(spec)
        assert spec.distribution == "uniform"

    def test_unary_alphabet(self):
        """sigma = 1 makes every sequence identical."""
        dataset = generate(GenSpec(3, 8, 1))
        assert len(set(dataset.sequences)) == 1

    def test_uniform_content(self):
        """Uniform symbols each take about 1/sigma of the characters."""
        dataset = generate(GenSpec(50, 400, 4, seed=2))
        total = dataset.total_length
        tolerance = 3 * np.sqrt(0.25 * 0.75 / total) * 4
        for fraction in alphabet_content(dataset).fractions:
            assert fraction == pytest.approx(0.25, abs=tolerance)

    def test_random_contents_follow_sampled_vector(self):
        """Each symbol's share is within 3 standard errors of the dataset's drawn vector."""
        spec = GenSpec(50, 400, 4, Distribution.RANDOM_CONTENTS, seed=2)
        expected = symbol_probabilities(spec, np.random.Generator(np.random.PCG64(2)))
        assert expected is not None
        dataset = generate(spec)
        total = dataset.total_length
        for got, want in zip(alphabet_content(dataset).fractions, expected):
            assert abs(got - want) <= 3 * np.sqrt(want * (1 - want) / total)

    def test_beta_skew_content(self):
        """Beta-skew content follows [b/2, b/2, (1-b)/2, (1-b)/2]."""
        for beta in (0.1, 0.3, 0.5):
            dataset = generate(GenSpec(100, 1000, 4, "beta_skew", seed=11, beta=beta))
            fractions = alphabet_content(dataset).fractions
            expected = (beta / 2, beta / 2, (1 - beta) / 2, (1 - beta) / 2)
            for got, want in zip(fractions, expected):
                assert got == pytest.approx(want, abs=0.02)

    def test_batch_is_prefix_stable(self):
        """Growing a batch keeps its earlier datasets."""
        spec = GenSpec(3, 10, 4, seed=77)
        small = generate_batch(spec, 3)
        large = generate_batch(spec, 5)
        assert large[:3] == small
        assert len({d.sequences for d in large}) == 5
        assert large[1].name == "uniform-k3-n10-s4-seed77-1"

    def test_batch_count(self):
        """A batch needs at least one dataset."""
        with pytest.raises(GeneratorSpecError) as excinfo:
            generate_batch(GenSpec(3, 10, 4), 0)
        assert excinfo.value.field == "count"
