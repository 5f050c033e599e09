"""
Templates: candidate common subsequences fed to the extension stage.

A template remembers where it came from so that results can report their
provenance and ties can be broken in a fixed origin order:
deposition(MF) < deposition(MC) < basic < empty.
"""

from dataclasses import dataclass, replace
from enum import Enum
from typing import Optional

from dealcs.core.config import DepositionMethod
from dealcs.core.sequences import Alphabet, Sequence


class OriginKind(str, Enum):
    """How a template was produced."""

    DEPOSITION = "deposition"
    BASIC = "basic"
    EMPTY = "empty"


@dataclass(frozen=True)
class TemplateOrigin:
    """Provenance of a template."""

    kind: OriginKind
    method: Optional[DepositionMethod] = None  # Deposition only
    search_range: Optional[int] = None  # Deposition only
    symbol: Optional[int] = None  # Basic only

    @classmethod
    def deposition(cls, method: DepositionMethod, search_range: int) -> "TemplateOrigin":
        """Origin of a deposition template."""
        return cls(OriginKind.DEPOSITION, method=method, search_range=search_range)

    @classmethod
    def basic(cls, symbol: int) -> "TemplateOrigin":
        """Origin of a single-symbol template."""
        return cls(OriginKind.BASIC, symbol=symbol)

    @classmethod
    def empty(cls) -> "TemplateOrigin":
        """Origin of the empty template."""
        return cls(OriginKind.EMPTY)

    @property
    def rank(self) -> int:
        """Tie-break rank: MF deposition, MC deposition, basic, empty."""
        if self.kind is OriginKind.DEPOSITION:
            return 0 if self.method is DepositionMethod.MF else 1
        return 2 if self.kind is OriginKind.BASIC else 3

    def describe(self, alphabet: Optional[Alphabet] = None) -> str:
        """Human-readable origin, e.g. ``deposition(MC, L=50)`` or ``basic(A)``."""
        if self.kind is OriginKind.DEPOSITION:
            method = self.method.value if self.method is not None else "?"
            return f"deposition({method}, L={self.search_range})"
        if self.kind is OriginKind.BASIC:
            symbol = self.symbol
            if alphabet is not None and symbol is not None:
                return f"basic({alphabet.label(symbol)})"
            return f"basic({symbol})"
        return "empty"


@dataclass(frozen=True)
class Template:
    """A common subsequence plus its origin."""

    body: Sequence
    origin: TemplateOrigin

    def __len__(self) -> int:
        return len(self.body)

    def with_body(self, body: Sequence) -> "Template":
        """Return a template with the same origin and a new body."""
        return replace(self, body=body)
