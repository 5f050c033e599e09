"""
Deposition: build a template by advancing one front per sequence.

Each sequence S_i has a front f_i, the number of its characters already
processed. A step picks a symbol and, when the symbol is found in the next
L characters of every sequence (the search window), deposits it onto the
template and moves every front past its first occurrence. When no symbol can
be deposited the step only moves some fronts forward by one. The loop stops
as soon as any front reaches the end of its sequence.

Two step rules are provided:
    MF (Most Front): take the symbol shown by the most fronts.
    MC (Min Change): take the symbol, among those found in every window,
        that moves the fronts the least in total.
"""

from dataclasses import dataclass, field

import numpy as np

from dealcs.core.config import DepositionMethod
from dealcs.core.index import SubsequenceIndex
from dealcs.core.sequences import Dataset, Sequence
from dealcs.utils.logging import get_logger

from .templates import Template, TemplateOrigin


@dataclass(frozen=True)
class DepositionConfig:
    """Step rule and search range L (in characters) for one deposition run."""

    method: DepositionMethod
    search_range: int

    def __post_init__(self) -> None:
        try:
            method = DepositionMethod(getattr(self.method, "value", self.method))
        except ValueError as e:
            raise ValueError(f"method must be MF or MC, got {self.method!r}") from e
        object.__setattr__(self, "method", method)
        if isinstance(self.search_range, bool) or not isinstance(
            self.search_range, (int, np.integer)
        ):
            raise TypeError(
                f"search_range must be an integer, got {type(self.search_range).__name__}"
            )
        if self.search_range < 1:
            raise ValueError(f"search_range must be >= 1, got {self.search_range}")
        object.__setattr__(self, "search_range", int(self.search_range))


@dataclass
class FrontState:
    """Per-sequence fronts and the number of steps taken."""

    fronts: np.ndarray
    step: int = 0
    deposited: list[int] = field(default_factory=list)

    @classmethod
    def initial(cls, index: SubsequenceIndex) -> "FrontState":
        """All fronts at offset 0."""
        return cls(index.start())

    def running(self, index: SubsequenceIndex) -> bool:
        """True while every front is inside its sequence."""
        return bool((self.fronts < index.lengths).all())

    @property
    def progress(self) -> int:
        """Total characters processed over all sequences."""
        return int(self.fronts.sum())


def _mf_step(index: SubsequenceIndex, state: FrontState, search_range: int) -> None:
    fronts = state.fronts
    symbol = int(np.argmax(index.front_counts(fronts)))
    first = index.first_occurrences(fronts)[:, symbol]
    if (first < index.window_limits(fronts, search_range)).all():
        state.deposited.append(symbol)
        state.fronts = first.astype(np.int64) + 1
    else:
        state.fronts = fronts + (index.front_symbols(fronts) == symbol)


def _mc_step(index: SubsequenceIndex, state: FrontState, search_range: int) -> None:
    fronts = state.fronts
    first = index.first_occurrences(fronts).astype(np.int64)
    limits = index.window_limits(fronts, search_range)
    present = (first < limits[:, None]).all(axis=0)
    if present.any():
        change = (first + 1 - fronts[:, None]).sum(axis=0)
        # argmin keeps the first minimum, i.e. alphabet order
        change = np.where(present, change, np.iinfo(np.int64).max)
        symbol = int(np.argmin(change))
        state.deposited.append(symbol)
        state.fronts = first[:, symbol] + 1
    else:
        counts = index.front_counts(fronts)
        counts = np.where(counts > 0, counts, np.iinfo(np.int64).max)
        symbol = int(np.argmin(counts))
        state.fronts = fronts + (index.front_symbols(fronts) == symbol)


_STEPS = {
    DepositionMethod.MF: _mf_step,
    DepositionMethod.MC: _mc_step,
}


def deposit(dataset: Dataset, config: DepositionConfig) -> Template:
    """
    Run deposition on a dataset.

    Args:
        dataset: Problem instance
        config: Step rule and search range

    Returns:
        Template whose body is a common subsequence of the dataset
        (empty when some sequence is empty or nothing could be deposited)
    """
    index = dataset.index
    state = FrontState.initial(index)
    step = _STEPS[config.method]

    while state.running(index):
        before = state.progress
        step(index, state, config.search_range)
        state.step += 1
        if state.progress <= before:
            raise RuntimeError(f"deposition stalled at step {state.step} (fronts {state.fronts})")

    body = Sequence(tuple(state.deposited))
    get_logger().debug(
        f"deposit {config.method.value} L={config.search_range}: "
        f"{len(body)} symbols in {state.step} steps"
    )
    return Template(body, TemplateOrigin.deposition(config.method, config.search_range))
