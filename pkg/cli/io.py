"""
Dataset files.

Formats:
    fasta   '>' lines are headers; the sequence lines of a record are joined,
            whitespace removed and letters uppercased
    lines   one sequence per non-empty line (UTF-8), trailing whitespace removed
    raw     each file is one sequence of byte symbols (read as latin-1)

The alphabet is inferred in order of first appearance unless declared. With
a declared alphabet an unknown symbol is a parse error carrying its line
number, or is dropped when drop_unknown is set.
"""

from collections.abc import Iterable
from enum import Enum
from pathlib import Path
from typing import Optional, TextIO, Union

from dealcs.core.exceptions import InputParseError
from dealcs.core.sequences import Alphabet, Dataset
from dealcs.utils.logging import get_logger

PathLike = Union[str, Path]


class InputFormat(str, Enum):
    """Supported dataset file formats."""

    FASTA = "fasta"
    LINES = "lines"
    RAW = "raw"


class _Collector:
    """Accumulates sequence text, checking symbols against a declared alphabet."""

    def __init__(self, alphabet: Optional[Alphabet], drop_unknown: bool):
        self.alphabet = alphabet
        self.drop_unknown = drop_unknown
        self.texts: list[str] = []
        self.dropped = 0

    def check(self, text: str, path: str, line_number: int) -> str:
        if self.alphabet is None:
            return text
        unknown = [symbol for symbol in text if symbol not in self.alphabet]
        if not unknown:
            return text
        if not self.drop_unknown:
            raise InputParseError(
                f"symbol {unknown[0]!r} is not in the declared alphabet",
                path=path,
                line_number=line_number,
            )
        self.dropped += len(unknown)
        return "".join(symbol for symbol in text if symbol in self.alphabet)


def _read_text(path: Path) -> str:
    try:
        return path.read_text(encoding="utf-8")
    except FileNotFoundError as e:
        raise InputParseError("file not found", path=str(path)) from e
    except UnicodeDecodeError as e:
        raise InputParseError(f"not valid UTF-8 ({e.reason})", path=str(path)) from e
    except OSError as e:
        raise InputParseError(f"cannot read file: {e}", path=str(path)) from e


def _parse_fasta(path: Path, collector: _Collector) -> int:
    name = str(path)
    records = 0
    current: Optional[list[str]] = None
    for line_number, line in enumerate(_read_text(path).splitlines(), start=1):
        if line.startswith(">"):
            if current is not None:
                collector.texts.append("".join(current))
            current = []
            records += 1
            continue
        chunk = "".join(line.split()).upper()
        if not chunk:
            continue
        if current is None:
            raise InputParseError("sequence data before the first '>' header", name, line_number)
        current.append(collector.check(chunk, name, line_number))
    if current is not None:
        collector.texts.append("".join(current))
    return records


def _parse_lines(path: Path, collector: _Collector) -> int:
    name = str(path)
    records = 0
    for line_number, line in enumerate(_read_text(path).splitlines(), start=1):
        line = line.rstrip()
        if not line:
            continue
        collector.texts.append(collector.check(line, name, line_number))
        records += 1
    return records


def _parse_raw(path: Path, collector: _Collector) -> int:
    try:
        text = path.read_bytes().decode("latin-1")
    except FileNotFoundError as e:
        raise InputParseError("file not found", path=str(path)) from e
    except OSError as e:
        raise InputParseError(f"cannot read file: {e}", path=str(path)) from e
    if not text:
        return 0
    collector.texts.append(collector.check(text, str(path), 1))
    return 1


_PARSERS = {
    InputFormat.FASTA: _parse_fasta,
    InputFormat.LINES: _parse_lines,
    InputFormat.RAW: _parse_raw,
}


def parse_input(
    paths: Union[PathLike, Iterable[PathLike]],
    fmt: Union[InputFormat, str] = InputFormat.LINES,
    alphabet: Optional[Union[Alphabet, str]] = None,
    drop_unknown: bool = False,
    truncate: Optional[int] = None,
) -> Dataset:
    """
    Read a dataset from one or more files.

    Sequences of all files are concatenated in path order.

    Args:
        paths: File path or paths
        fmt: fasta, lines or raw
        alphabet: Declared alphabet (labels in order); inferred when omitted
        drop_unknown: Drop symbols outside the declared alphabet instead of failing
        truncate: Keep only the first ``truncate`` symbols of every sequence

    Returns:
        Dataset named after the first path

    Raises:
        InputParseError: On unreadable or empty files, no sequences, or unknown symbols.
        ValueError: If the format is unknown.
    """
    if isinstance(paths, (str, Path)):
        paths = [paths]
    path_list = [Path(p) for p in paths]
    if not path_list:
        raise InputParseError("no input files given")

    try:
        fmt = InputFormat(getattr(fmt, "value", fmt))
    except ValueError as e:
        raise ValueError(
            f"format must be one of {[f.value for f in InputFormat]}, got {fmt!r}"
        ) from e
    if alphabet is not None and not isinstance(alphabet, Alphabet):
        alphabet = Alphabet.from_labels(alphabet)

    collector = _Collector(alphabet, drop_unknown)
    for path in path_list:
        if _PARSERS[fmt](path, collector) == 0:
            raise InputParseError("empty file: no sequences", path=str(path), line_number=1)

    if collector.dropped:
        get_logger().warning(f"dropped {collector.dropped} symbols outside the alphabet")

    try:
        dataset = Dataset.from_strings(collector.texts, alphabet=alphabet, name=str(path_list[0]))
    except ValueError as e:
        raise InputParseError(str(e), path=str(path_list[0])) from e

    if truncate is not None:
        dataset = dataset.truncate(truncate)
    get_logger().debug(
        f"parsed {dataset.k} sequences (sigma={dataset.sigma}, max_len={dataset.max_len}) "
        f"from {len(path_list)} {fmt.value} file(s)"
    )
    return dataset


def format_dataset(dataset: Dataset, fmt: Union[InputFormat, str] = InputFormat.LINES) -> str:
    """
    Render a dataset as fasta or lines text.

    Raises:
        ValueError: For the raw format, an unknown format, or fasta output of
            labels that would not read back (lowercase, whitespace or '>').
    """
    fmt = InputFormat(getattr(fmt, "value", fmt))
    if fmt is InputFormat.FASTA:
        unreadable = [
            label
            for label in dataset.alphabet.symbols
            if label != label.upper() or not label.strip() or label == ">"
        ]
        if unreadable:
            raise ValueError(
                f"fasta input is uppercased and whitespace-stripped, so labels {unreadable[:5]} "
                "would not read back; use the lines format"
            )
    texts = [dataset.decode(seq) for seq in dataset.sequences]
    if fmt is InputFormat.LINES:
        return "".join(f"{text}\n" for text in texts)
    if fmt is InputFormat.FASTA:
        prefix = dataset.name or "seq"
        return "".join(f">{prefix}_{i}\n{text}\n" for i, text in enumerate(texts))
    raise ValueError("raw format holds a single sequence per file; use lines or fasta")


def write_dataset(
    dataset: Dataset,
    target: Union[PathLike, TextIO],
    fmt: Union[InputFormat, str] = InputFormat.LINES,
) -> None:
    """Write a dataset to a path or an open text stream."""
    text = format_dataset(dataset, fmt)
    if isinstance(target, (str, Path)):
        Path(target).write_text(text, encoding="utf-8")
    else:
        target.write(text)
