"""
Extension: grow templates into longer common subsequences.

Two moves are applied until neither changes the template:

    extend_ends   insert one symbol at the right or left end
    expand_runs   replicate the symbol of a run inside the template

Both moves only ever keep a candidate that is still a common subsequence,
checked against greedy prefix (left) and suffix (right) matches from the
dataset's occurrence index.
"""

from collections.abc import Iterable, Iterator
from dataclasses import dataclass, field
from itertools import groupby
from typing import Optional

import numpy as np

from dealcs.core.config import DepositionMethod, PoolMode
from dealcs.core.exceptions import NotCommonSubsequenceError
from dealcs.core.index import SubsequenceIndex
from dealcs.core.sequences import Dataset, Sequence
from dealcs.utils.logging import get_logger, log_template

from .deposition import DepositionConfig, deposit
from .templates import Template, TemplateOrigin


def _require_common(index: SubsequenceIndex, body: Sequence) -> np.ndarray:
    """Return the forward match of ``body``; raise if some sequence lacks it."""
    positions = index.forward(body)
    missing = np.flatnonzero(~index.matched(positions))
    if missing.size:
        raise NotCommonSubsequenceError(
            f"Template of length {len(body)} is not a subsequence of sequence {missing[0]}",
            sequence_index=int(missing[0]),
        )
    return positions


def extend_ends(template: Template, dataset: Dataset) -> Template:
    """
    Insert symbols at either end of the template one at a time.

    The right end is tried first, then the left; symbols are tried in
    alphabet order. The first insertion that keeps a common subsequence is
    accepted and the scan restarts. Stops when no end insertion works.

    Args:
        template: Template whose body is a common subsequence of the dataset
        dataset: Problem instance

    Returns:
        Template with the same origin and a body at least as long

    Raises:
        NotCommonSubsequenceError: If the template is not a common subsequence.
    """
    index = dataset.index
    positions: Optional[np.ndarray] = _require_common(index, template.body)
    starts: Optional[np.ndarray] = None
    body = list(template.body)

    while True:
        if positions is None:
            positions = index.forward(body)
        appendable = index.appendable(positions)
        if appendable.any():
            symbol = int(np.argmax(appendable))
            body.append(symbol)
            positions = index.advance(positions, symbol)
            starts = None
            continue

        if starts is None:
            starts = index.backward(body)
        prependable = index.prependable(starts)
        if prependable.any():
            symbol = int(np.argmax(prependable))
            body.insert(0, symbol)
            starts = index.retreat(starts, symbol)
            positions = None
            continue

        break

    if len(body) == len(template.body):
        return template
    return template.with_body(Sequence(tuple(body)))


def _grow_runs_once(index: SubsequenceIndex, body: tuple[int, ...]) -> tuple[int, ...]:
    runs = [(symbol, len(list(group))) for symbol, group in groupby(body)]

    # suffix_starts[r]: right-greedy start of everything after run r
    suffix_starts: list[np.ndarray] = [index.end()] * len(runs)
    starts = index.end()
    for r in range(len(runs) - 1, -1, -1):
        suffix_starts[r] = starts
        symbol, count = runs[r]
        for _ in range(count):
            starts = index.retreat(starts, symbol)

    positions = index.start()
    grown: list[int] = []
    for r, (symbol, count) in enumerate(runs):
        for _ in range(count):
            positions = index.advance(positions, symbol)
        while True:
            nxt = index.next_at[index.rows, positions, symbol]
            if not (nxt < suffix_starts[r]).all():
                break
            positions = nxt.astype(np.int64) + 1
            count += 1
        grown.extend([symbol] * count)
    return tuple(grown)


def expand_runs(template: Template, dataset: Dataset) -> Template:
    """
    Lengthen every maximal run of the template while it stays a common subsequence.

    Runs are visited left to right; whole passes repeat until one changes nothing.

    Args:
        template: Template whose body is a common subsequence of the dataset
        dataset: Problem instance

    Returns:
        Template with the same origin and a body at least as long

    Raises:
        NotCommonSubsequenceError: If the template is not a common subsequence.
    """
    index = dataset.index
    _require_common(index, template.body)

    body = tuple(template.body)
    while True:
        grown = _grow_runs_once(index, body)
        if len(grown) == len(body):
            break
        body = grown

    if len(body) == len(template.body):
        return template
    return template.with_body(Sequence(body))


def extend(template: Template, dataset: Dataset) -> Template:
    """
    Alternate end extension and run expansion until neither changes the template.

    The result is a fixed point of both moves, so ``extend`` is idempotent.

    Raises:
        NotCommonSubsequenceError: If the template is not a common subsequence.
    """
    current = template
    while True:
        grown = expand_runs(extend_ends(current, dataset), dataset)
        if len(grown) == len(current):
            return grown
        current = grown


def grow(template: Template, dataset: Dataset) -> Template:
    """
    Extend a pool template.

    A single-symbol template first grows its run to the longest repetition
    common to all sequences, then goes through ``extend``. Other templates go
    straight to ``extend``.
    """
    if len(template) == 1:
        template = expand_runs(template, dataset)
    return extend(template, dataset)


@dataclass
class TemplatePool:
    """Templates to extend, deduplicated by body; the first origin seen is kept."""

    templates: list[Template] = field(default_factory=list)

    def __post_init__(self) -> None:
        initial, self.templates = self.templates, []
        self._bodies: set[Sequence] = set()
        for template in initial:
            self.add(template)

    def add(self, template: Template) -> bool:
        """Add a template unless its body is already pooled; returns True if added."""
        if template.body in self._bodies:
            return False
        self._bodies.add(template.body)
        self.templates.append(template)
        return True

    def __len__(self) -> int:
        return len(self.templates)

    def __iter__(self) -> Iterator[Template]:
        return iter(self.templates)

    def __contains__(self, body: object) -> bool:
        return body in self._bodies

    @property
    def bodies(self) -> list[Sequence]:
        """Bodies in pool order."""
        return [template.body for template in self.templates]


def basic_templates(dataset: Dataset) -> list[Template]:
    """Single-symbol templates for every symbol present in all sequences, alphabet order."""
    index = dataset.index
    common = np.flatnonzero(index.appendable(index.start()))
    return [Template(Sequence((int(symbol),)), TemplateOrigin.basic(int(symbol))) for symbol in common]


def build_pool(
    dataset: Dataset,
    search_ranges: Iterable[int],
    methods: Iterable[DepositionMethod] = (DepositionMethod.MF, DepositionMethod.MC),
    mode: PoolMode = PoolMode.FULL,
) -> TemplatePool:
    """
    Build the template pool for a dataset.

    Pool order is MF deposition templates (by search range), MC deposition
    templates, single-symbol templates, then the empty template, so that a
    duplicate body keeps its highest-ranked origin.

    Args:
        dataset: Problem instance
        search_ranges: Search ranges L to deposit with (each >= 1)
        methods: Deposition rules to run
        mode: Which template families enter the pool

    Returns:
        Deduplicated TemplatePool

    Raises:
        ValueError: If no search range is given or one is below 1.
    """
    search_ranges = list(search_ranges)
    if not search_ranges:
        raise ValueError("search_ranges must not be empty")
    for value in search_ranges:
        if value < 1:
            raise ValueError(f"search range must be >= 1, got {value}")

    pool = TemplatePool()
    if mode is not PoolMode.BASIC:
        ordered = sorted(set(methods), key=lambda m: 0 if m is DepositionMethod.MF else 1)
        for method in ordered:
            for search_range in search_ranges:
                template = deposit(dataset, DepositionConfig(method, search_range))
                if pool.add(template):
                    log_template(template, dataset.alphabet, "pool")
    if mode is not PoolMode.DEPOSITION:
        for template in basic_templates(dataset):
            pool.add(template)
    pool.add(Template(Sequence(), TemplateOrigin.empty()))

    get_logger().debug(f"pool: {len(pool)} templates from L={search_ranges}")
    return pool
