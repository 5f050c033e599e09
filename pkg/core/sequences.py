"""
Problem-instance types and subsequence predicates.

Symbols are stored as dense integer codes into an Alphabet; the alphabet
keeps the printable labels. Alphabet order is the order of declaration
(or of first appearance when inferred) and is used for every tie-break
downstream.

    alphabet = Alphabet.from_labels("ACGT")
    dataset = Dataset.from_strings(["ACGT", "AGT"], alphabet=alphabet)
    is_common_subsequence(alphabet.encode("AG"), dataset)  # True
"""

from collections.abc import Iterable, Iterator
from dataclasses import dataclass, field
from functools import cached_property
from typing import TYPE_CHECKING, Optional, Union

import numpy as np

from dealcs.core.exceptions import EmptyDatasetError

if TYPE_CHECKING:
    from dealcs.core.index import SubsequenceIndex


@dataclass(frozen=True)
class Alphabet:
    """Ordered set of distinct symbol labels."""

    symbols: tuple[str, ...]

    def __post_init__(self) -> None:
        if not isinstance(self.symbols, tuple):
            object.__setattr__(self, "symbols", tuple(self.symbols))
        if not self.symbols:
            raise ValueError("Alphabet must contain at least one symbol")
        if len(set(self.symbols)) != len(self.symbols):
            raise ValueError(f"Alphabet symbols must be distinct, got {self.symbols!r}")

    @classmethod
    def from_labels(cls, labels: Iterable[str]) -> "Alphabet":
        """Build an alphabet from labels in the given order (a string counts as characters)."""
        return cls(tuple(labels))

    @classmethod
    def infer(cls, texts: Iterable[Iterable[str]]) -> "Alphabet":
        """Build an alphabet from the first appearance order of symbols in ``texts``.

        Raises:
            ValueError: If the texts contain no symbols at all.
        """
        seen: dict[str, None] = {}
        for text in texts:
            for symbol in text:
                seen.setdefault(symbol, None)
        return cls(tuple(seen))

    @property
    def size(self) -> int:
        """Number of symbols |Σ|."""
        return len(self.symbols)

    @cached_property
    def _codes(self) -> dict[str, int]:
        return {symbol: code for code, symbol in enumerate(self.symbols)}

    def __contains__(self, label: object) -> bool:
        return label in self._codes

    def __len__(self) -> int:
        return len(self.symbols)

    def code(self, label: str) -> int:
        """Return the integer code of ``label``.

        Raises:
            KeyError: If the label is not part of the alphabet.
        """
        return self._codes[label]

    def label(self, code: int) -> str:
        """Return the label for an integer code."""
        return self.symbols[code]

    def encode(self, text: Iterable[str]) -> "Sequence":
        """Encode labels into a Sequence.

        Raises:
            ValueError: If a label is not part of the alphabet.
        """
        codes = []
        for label in text:
            try:
                codes.append(self._codes[label])
            except KeyError as e:
                raise ValueError(f"Symbol {label!r} is not in the alphabet") from e
        return Sequence(tuple(codes))

    def decode(self, sequence: Iterable[int]) -> str:
        """Decode a sequence of codes into a string of labels."""
        return "".join(self.symbols[code] for code in sequence)


@dataclass(frozen=True)
class Sequence:
    """Immutable sequence of integer symbol codes."""

    symbols: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "symbols", tuple(int(s) for s in self.symbols))

    @property
    def length(self) -> int:
        """Sequence length n."""
        return len(self.symbols)

    def __len__(self) -> int:
        return len(self.symbols)

    def __iter__(self) -> Iterator[int]:
        return iter(self.symbols)

    def __getitem__(self, item):
        if isinstance(item, slice):
            return Sequence(self.symbols[item])
        return self.symbols[item]

    def __add__(self, other: "Sequence") -> "Sequence":
        return Sequence(self.symbols + tuple(other))

    def as_array(self) -> np.ndarray:
        """Return the codes as an int64 numpy array."""
        return np.asarray(self.symbols, dtype=np.int64)


@dataclass(frozen=True)
class Dataset:
    """k sequences over a shared alphabet: the problem instance."""

    alphabet: Alphabet
    sequences: tuple[Sequence, ...]
    name: Optional[str] = field(default=None, compare=False)

    def __post_init__(self) -> None:
        if not isinstance(self.sequences, tuple):
            object.__setattr__(self, "sequences", tuple(self.sequences))
        if not self.sequences:
            raise ValueError("Dataset must contain at least one sequence")
        size = self.alphabet.size
        for i, seq in enumerate(self.sequences):
            if not isinstance(seq, Sequence):
                raise TypeError(f"Sequence {i} must be a Sequence, got {type(seq).__name__}")
            if any(not 0 <= code < size for code in seq):
                raise ValueError(f"Sequence {i} contains a code outside the alphabet (size {size})")

    @classmethod
    def from_strings(
        cls,
        texts: Iterable[str],
        alphabet: Optional[Union[Alphabet, str, Iterable[str]]] = None,
        name: Optional[str] = None,
    ) -> "Dataset":
        """Build a dataset from label strings, inferring the alphabet unless one is given.

        Raises:
            ValueError: If no texts are given, or a symbol is outside a declared alphabet.
        """
        texts = list(texts)
        if alphabet is None:
            if not any(texts):
                raise ValueError("Cannot infer an alphabet from empty sequences; declare one")
            alphabet = Alphabet.infer(texts)
        elif not isinstance(alphabet, Alphabet):
            alphabet = Alphabet.from_labels(alphabet)
        return cls(alphabet, tuple(alphabet.encode(text) for text in texts), name=name)

    @property
    def k(self) -> int:
        """Number of sequences."""
        return len(self.sequences)

    @property
    def sigma(self) -> int:
        """Alphabet size |Σ|."""
        return self.alphabet.size

    @property
    def lengths(self) -> tuple[int, ...]:
        """Length of every sequence."""
        return tuple(len(seq) for seq in self.sequences)

    @property
    def max_len(self) -> int:
        """Length of the longest sequence, n."""
        return max(self.lengths)

    @property
    def min_len(self) -> int:
        """Length of the shortest sequence."""
        return min(self.lengths)

    @property
    def total_length(self) -> int:
        """Sum of all sequence lengths."""
        return sum(self.lengths)

    def __len__(self) -> int:
        return len(self.sequences)

    def __iter__(self) -> Iterator[Sequence]:
        return iter(self.sequences)

    def __getitem__(self, index: int) -> Sequence:
        return self.sequences[index]

    @cached_property
    def index(self) -> "SubsequenceIndex":
        """Next/previous occurrence tables, built on first use."""
        from dealcs.core.index import SubsequenceIndex

        return SubsequenceIndex(self)

    def decode(self, sequence: Iterable[int]) -> str:
        """Decode a sequence of codes with this dataset's alphabet."""
        return self.alphabet.decode(sequence)

    def subset(self, indices: Iterable[int]) -> "Dataset":
        """Return a dataset restricted to the given sequence indices (same alphabet)."""
        return Dataset(self.alphabet, tuple(self.sequences[i] for i in indices), name=self.name)

    def truncate(self, length: int) -> "Dataset":
        """Return a dataset where every sequence is cut to its first ``length`` symbols.

        Raises:
            ValueError: If length is negative.
        """
        if length < 0:
            raise ValueError(f"Truncation length must be >= 0, got {length}")
        return Dataset(
            self.alphabet, tuple(seq[:length] for seq in self.sequences), name=self.name
        )


@dataclass(frozen=True)
class AlphabetStats:
    """Alphabet content r_i: share of each symbol over all characters of a dataset."""

    alphabet: Alphabet
    fractions: tuple[float, ...]

    @property
    def content(self) -> dict[str, float]:
        """Map of symbol label to content fraction."""
        return dict(zip(self.alphabet.symbols, self.fractions))

    def __getitem__(self, label: str) -> float:
        return self.fractions[self.alphabet.code(label)]

    def ranked(self) -> list[int]:
        """Symbol codes by descending content, ties by alphabet order."""
        return sorted(range(len(self.fractions)), key=lambda code: (-self.fractions[code], code))


def is_subsequence(t: Iterable[int], s: Iterable[int]) -> bool:
    """
    Check whether ``t`` is a subsequence of ``s``.

    Greedy left-to-right matching, O(|s|).

    Args:
        t: Candidate subsequence (codes)
        s: Sequence to search (codes)

    Returns:
        True if t can be obtained from s by deleting characters
    """
    remaining = iter(s)
    return all(symbol in remaining for symbol in t)


def is_common_subsequence(t: Iterable[int], dataset: Dataset) -> bool:
    """
    Check whether ``t`` is a subsequence of every sequence in ``dataset``.

    This is the independent checker: it never consults the occurrence index.
    """
    t = tuple(t)
    return all(is_subsequence(t, seq) for seq in dataset.sequences)


def alphabet_content(dataset: Dataset) -> AlphabetStats:
    """
    Compute the alphabet content of every symbol.

    Returns:
        AlphabetStats with fractions summing to 1

    Raises:
        EmptyDatasetError: If every sequence is empty.
    """
    total = dataset.total_length
    if total == 0:
        raise EmptyDatasetError("empty dataset")
    codes = np.concatenate([seq.as_array() for seq in dataset.sequences])
    counts = np.bincount(codes, minlength=dataset.sigma)
    return AlphabetStats(dataset.alphabet, tuple(float(c) / total for c in counts))
