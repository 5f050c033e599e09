"""Seeded dataset generation.

This package provides:
- GenSpec, Distribution: generator parameters (validate() names the bad field)
- generate, generate_batch: reproducible datasets from PCG64 seeds
- symbol_labels, symbol_probabilities: helpers shared with the command line

Use __all__ as the canonical list of exported names.
"""

from .generators import (
    Distribution,
    GenSpec,
    generate,
    generate_batch,
    symbol_labels,
    symbol_probabilities,
)

__all__ = [
    "Distribution",
    "GenSpec",
    "generate",
    "generate_batch",
    "symbol_labels",
    "symbol_probabilities",
]
