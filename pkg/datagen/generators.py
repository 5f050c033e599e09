"""
Seeded random datasets.

Every dataset is drawn from numpy's PCG64 bit generator, seeded with the
spec's 64-bit seed, so the same spec yields identical sequences on every
platform. Batches derive one child seed per dataset index through
numpy.random.SeedSequence.

Distributions:
    uniform          every symbol with probability 1/sigma
    random_contents  one probability vector per dataset, from sigma uniform(0, 1)
                     draws normalised to sum 1
    beta_skew        sigma = 4 with probabilities [β/2, β/2, (1-β)/2, (1-β)/2]
"""

import string
from dataclasses import dataclass, replace
from enum import Enum
from typing import Optional, Union

import numpy as np

from dealcs.core.exceptions import GeneratorSpecError
from dealcs.core.sequences import Alphabet, Dataset, Sequence
from dealcs.utils.logging import get_logger

MAX_SEED = 2**64

# Symbol labels in order; larger alphabets continue at U+0100
_LABELS = string.ascii_uppercase + string.ascii_lowercase + string.digits
_EXTENDED_LABEL_START = 0x100

_BETA_SKEW_SIGMA = 4


class Distribution(str, Enum):
    """Symbol distribution of a generated dataset."""

    UNIFORM = "uniform"
    RANDOM_CONTENTS = "random_contents"
    BETA_SKEW = "beta_skew"


def symbol_labels(sigma: int) -> Alphabet:
    """Alphabet of sigma generated labels: A-Z, a-z, 0-9, then U+0100 onwards."""
    labels = [
        _LABELS[i] if i < len(_LABELS) else chr(_EXTENDED_LABEL_START + i - len(_LABELS))
        for i in range(sigma)
    ]
    return Alphabet(tuple(labels))


@dataclass
class GenSpec:
    """Parameters of one generated dataset (or a batch of them)."""

    k: int
    n: int
    sigma: int
    distribution: Union[Distribution, str] = Distribution.UNIFORM
    seed: int = 0
    beta: Optional[float] = None  # beta_skew only

    def validate(self) -> None:
        """Validate and normalize the spec.

        Raises:
            GeneratorSpecError: Naming the offending field.
        """
        for name in ("k", "n", "sigma"):
            value = getattr(self, name)
            try:
                val = int(value)
            except (TypeError, ValueError) as e:
                raise GeneratorSpecError(
                    f"{name} must be an integer, got {value!r}", field=name
                ) from e
            if isinstance(value, float) and value != val:
                raise GeneratorSpecError(f"{name} must be an integer, got {value!r}", field=name)
            if val < 1:
                raise GeneratorSpecError(f"{name} must be >= 1, got {val}", field=name)
            setattr(self, name, val)

        try:
            self.distribution = Distribution(getattr(self.distribution, "value", self.distribution))
        except ValueError as e:
            raise GeneratorSpecError(
                f"distribution must be one of {[d.value for d in Distribution]}, "
                f"got {self.distribution!r}",
                field="distribution",
            ) from e

        try:
            seed = int(self.seed)
        except (TypeError, ValueError) as e:
            raise GeneratorSpecError(f"seed must be an integer, got {self.seed!r}", field="seed") from e
        if not 0 <= seed < MAX_SEED:
            raise GeneratorSpecError(f"seed must be in [0, 2**64), got {seed}", field="seed")
        self.seed = seed

        if self.distribution is Distribution.BETA_SKEW:
            if self.sigma != _BETA_SKEW_SIGMA:
                raise GeneratorSpecError(
                    f"beta_skew needs sigma = {_BETA_SKEW_SIGMA}, got {self.sigma}", field="sigma"
                )
            try:
                beta = float(self.beta)  # type: ignore[arg-type]
            except (TypeError, ValueError) as e:
                raise GeneratorSpecError(
                    f"beta_skew needs beta in (0, 1), got {self.beta!r}", field="beta"
                ) from e
            if not 0 < beta < 1:
                raise GeneratorSpecError(f"beta must be in (0, 1), got {beta}", field="beta")
            self.beta = beta

    @property
    def label(self) -> str:
        """Short identifier for names and logs."""
        distribution = getattr(self.distribution, "value", self.distribution)
        text = f"{distribution}-k{self.k}-n{self.n}-s{self.sigma}"
        if self.beta is not None:
            text += f"-b{self.beta:g}"
        return text


def symbol_probabilities(spec: GenSpec, rng: np.random.Generator) -> Optional[np.ndarray]:
    """Probability vector for the spec (None means uniform); may consume random draws."""
    if spec.distribution is Distribution.UNIFORM:
        return None
    if spec.distribution is Distribution.RANDOM_CONTENTS:
        weights = rng.random(spec.sigma)
        return weights / weights.sum()
    beta = float(spec.beta)  # type: ignore[arg-type]
    return np.array([beta / 2, beta / 2, (1 - beta) / 2, (1 - beta) / 2])


def _draw(spec: GenSpec, rng: np.random.Generator, name: str) -> Dataset:
    probabilities = symbol_probabilities(spec, rng)
    if probabilities is None:
        codes = rng.integers(0, spec.sigma, size=(spec.k, spec.n))
    else:
        codes = rng.choice(spec.sigma, size=(spec.k, spec.n), p=probabilities)
    sequences = tuple(Sequence(tuple(row.tolist())) for row in codes)
    return Dataset(symbol_labels(spec.sigma), sequences, name=name)


def generate(spec: GenSpec) -> Dataset:
    """
    Generate one dataset.

    Args:
        spec: Generator parameters (validated here)

    Returns:
        k sequences of length n

    Raises:
        GeneratorSpecError: If the spec is invalid.
    """
    spec = replace(spec)
    spec.validate()
    rng = np.random.Generator(np.random.PCG64(spec.seed))
    return _draw(spec, rng, f"{spec.label}-seed{spec.seed}")


def generate_batch(spec: GenSpec, count: int) -> list[Dataset]:
    """
    Generate ``count`` independent datasets from one base seed.

    Dataset i uses the i-th child of SeedSequence(spec.seed), so adding datasets
    to a batch never changes the earlier ones.

    Raises:
        GeneratorSpecError: If the spec is invalid or count < 1.
    """
    if count < 1:
        raise GeneratorSpecError(f"count must be >= 1, got {count}", field="count")
    spec = replace(spec)
    spec.validate()
    children = np.random.SeedSequence(spec.seed).spawn(count)
    datasets = [
        _draw(spec, np.random.Generator(np.random.PCG64(child)), f"{spec.label}-seed{spec.seed}-{i}")
        for i, child in enumerate(children)
    ]
    get_logger().debug(f"generated {count} datasets for {spec.label} seed={spec.seed}")
    return datasets
