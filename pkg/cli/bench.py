"""
Benchmark harness.

A bench runs every configured algorithm on every dataset of a matrix of
generator settings (and optional input files), checks each result with the
independent common-subsequence checker and writes one CSV row per
(dataset, algorithm), followed by '#'-prefixed summary lines with the mean
and sample standard deviation of the result length per (setting, algorithm).

Matrix files are JSON:

    {
      "seed": 7,
      "reps": 10,
      "algorithms": ["longrun", "dea-mc"],
      "settings": [
        {"k": 100, "n": 1000, "sigma": 4, "distribution": "random_contents"},
        {"k": 100, "n": 300, "sigma": 4, "distribution": "beta_skew", "beta": 0.3}
      ],
      "inputs": [{"paths": ["data/virus.fa"], "format": "fasta", "truncate": 500}]
    }

Rows are written in matrix order whatever order the workers finish in.
Elapsed times are only written when timing is requested, so the default CSV
is byte-identical across runs with the same seed.
"""

import csv
import json
import statistics
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, replace
from pathlib import Path
from typing import Any, Optional, TextIO

from dealcs.core.config import DEFAULT_CELL_BUDGET, Algorithm, DEAConfig
from dealcs.core.exceptions import InvalidResultError
from dealcs.core.sequences import Dataset, is_common_subsequence
from dealcs.core.solver import solve_with
from dealcs.datagen.generators import GenSpec, generate_batch
from dealcs.utils.logging import get_logger

from .io import InputFormat, parse_input

CSV_COLUMNS = (
    "dataset_id",
    "k",
    "n",
    "sigma",
    "algo",
    "cs_len",
    "valid",
    "elapsed_ms",
    "seed",
    "L_used",
)

NOT_AVAILABLE = "n/a"


@dataclass
class InputSpec:
    """Files read as one bench dataset."""

    paths: list[str]
    format: str = InputFormat.LINES.value
    alphabet: Optional[str] = None
    drop_unknown: bool = False
    truncate: Optional[int] = None


@dataclass
class BenchConfig:
    """Bench matrix."""

    settings: list[GenSpec] = field(default_factory=list)
    inputs: list[InputSpec] = field(default_factory=list)
    algorithms: tuple[Algorithm, ...] = (Algorithm.LONGRUN, Algorithm.DEA_MC)
    reps: int = 10
    seed: int = 0
    workers: int = 1
    timing: bool = False
    search_range: Optional[int] = None
    cell_budget: int = DEFAULT_CELL_BUDGET

    def validate(self) -> None:
        """Validate and normalize the matrix.

        Raises:
            ValueError: If a value is invalid or the matrix is empty.
            GeneratorSpecError: If a generator setting is invalid.
        """
        if not self.settings and not self.inputs:
            raise ValueError("bench needs at least one generator setting or input")

        algorithms = []
        for name in self.algorithms:
            try:
                algorithms.append(Algorithm(getattr(name, "value", name)))
            except ValueError as e:
                names = ", ".join(a.value for a in Algorithm)
                raise ValueError(f"Unknown algorithm {name!r}, expected one of {names}") from e
        if not algorithms:
            raise ValueError("algorithms must not be empty")
        self.algorithms = tuple(dict.fromkeys(algorithms))

        for name in ("reps", "workers", "cell_budget"):
            try:
                val = int(getattr(self, name))
            except (TypeError, ValueError) as e:
                raise ValueError(f"{name} must be an integer, got {getattr(self, name)!r}") from e
            if val < 1:
                raise ValueError(f"{name} must be >= 1, got {val}")
            setattr(self, name, val)

        try:
            self.seed = int(self.seed)
        except (TypeError, ValueError) as e:
            raise ValueError(f"seed must be an integer, got {self.seed!r}") from e

        for spec in self.settings:
            spec.validate()

        self.timing = bool(self.timing)

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> "BenchConfig":
        """Build a config from a parsed JSON matrix (not yet validated)."""
        if not isinstance(data, dict):
            raise ValueError("bench matrix must be a JSON object")
        seed = data.get("seed", 0)
        settings = [
            GenSpec(
                k=item.get("k"),
                n=item.get("n"),
                sigma=item.get("sigma"),
                distribution=item.get("distribution", "uniform"),
                seed=item.get("seed", seed),
                beta=item.get("beta"),
            )
            for item in data.get("settings", [])
        ]
        inputs = [
            InputSpec(
                paths=list(item["paths"]),
                format=item.get("format", InputFormat.LINES.value),
                alphabet=item.get("alphabet"),
                drop_unknown=bool(item.get("drop_unknown", False)),
                truncate=item.get("truncate"),
            )
            for item in data.get("inputs", [])
        ]
        return cls(
            settings=settings,
            inputs=inputs,
            algorithms=tuple(data.get("algorithms", cls.algorithms)),
            reps=data.get("reps", 10),
            seed=seed,
            workers=data.get("workers", 1),
            timing=data.get("timing", False),
            search_range=data.get("search_range"),
            cell_budget=data.get("cell_budget", DEFAULT_CELL_BUDGET),
        )

    @classmethod
    def from_file(cls, path: str) -> "BenchConfig":
        """Load a JSON matrix file.

        Raises:
            ValueError: If the file is not valid JSON or not a matrix.
        """
        try:
            data = json.loads(Path(path).read_text(encoding="utf-8"))
        except json.JSONDecodeError as e:
            raise ValueError(f"{path}: invalid JSON ({e.msg} at line {e.lineno})") from e
        return cls.from_dict(data)


@dataclass(frozen=True)
class BenchRow:
    """One (dataset, algorithm) measurement."""

    dataset_id: str
    k: int
    n: int
    sigma: int
    algo: str
    cs_len: int
    valid: bool
    elapsed_ms: float
    seed: Optional[int]
    L_used: Optional[int]  # noqa: N815 - CSV column name

    def as_csv(self, timing: bool = False) -> list[str]:
        """CSV cells in column order."""
        return [
            self.dataset_id,
            str(self.k),
            str(self.n),
            str(self.sigma),
            self.algo,
            str(self.cs_len),
            "true" if self.valid else "false",
            f"{self.elapsed_ms:.3f}" if timing else NOT_AVAILABLE,
            NOT_AVAILABLE if self.seed is None else str(self.seed),
            NOT_AVAILABLE if self.L_used is None else str(self.L_used),
        ]


@dataclass(frozen=True)
class BenchJob:
    """A dataset scheduled for benchmarking."""

    dataset_id: str
    setting: str
    dataset: Dataset
    seed: Optional[int]


@dataclass(frozen=True)
class SummaryLine:
    """Mean and sample standard deviation of cs_len for one (setting, algorithm)."""

    setting: str
    algo: str
    count: int
    mean: float
    stddev: float

    def format(self) -> str:
        """Summary text in the 'mean (sd)' cell format, prefixed with '#'."""
        return f"# {self.setting},{self.algo},n={self.count},{self.mean:.2f} ({self.stddev:.2f})"


@dataclass
class BenchReport:
    """Rows in matrix order plus per-setting summaries."""

    rows: list[BenchRow]
    summaries: list[SummaryLine]
    settings: dict[str, str] = field(default_factory=dict)  # dataset_id -> setting


def build_jobs(config: BenchConfig) -> list[BenchJob]:
    """Generate or read every dataset of the matrix, in matrix order."""
    jobs: list[BenchJob] = []
    for s, spec in enumerate(config.settings):
        for r, dataset in enumerate(generate_batch(spec, config.reps)):
            jobs.append(BenchJob(f"s{s}-r{r}", f"s{s}:{spec.label}", dataset, spec.seed))
    for i, item in enumerate(config.inputs):
        dataset = parse_input(
            item.paths,
            item.format,
            alphabet=item.alphabet,
            drop_unknown=item.drop_unknown,
            truncate=item.truncate,
        )
        jobs.append(BenchJob(f"in{i}", dataset.name or f"input{i}", dataset, None))
    return jobs


def run_job(job: BenchJob, algorithms: tuple[Algorithm, ...], dea: DEAConfig) -> list[BenchRow]:
    """
    Run every algorithm on one dataset.

    Raises:
        InvalidResultError: If the independent checker rejects a result.
    """
    rows = []
    for algorithm in algorithms:
        result = solve_with(job.dataset, algorithm, replace(dea))
        valid = is_common_subsequence(result.cs, job.dataset)
        if not valid:
            raise InvalidResultError(
                f"{algorithm.value} returned a non-common subsequence on {job.dataset_id}",
                algorithm=algorithm.value,
                dataset_id=job.dataset_id,
            )
        rows.append(
            BenchRow(
                dataset_id=job.dataset_id,
                k=job.dataset.k,
                n=job.dataset.max_len,
                sigma=job.dataset.sigma,
                algo=algorithm.value,
                cs_len=result.length,
                valid=valid,
                elapsed_ms=result.elapsed * 1000.0,
                seed=job.seed,
                L_used=result.search_range_used,
            )
        )
    return rows


def summarize(rows: list[BenchRow], settings: dict[str, str]) -> list[SummaryLine]:
    """Mean and sample standard deviation (0 for one value) per (setting, algorithm)."""
    groups: dict[tuple[str, str], list[int]] = {}
    for row in rows:
        groups.setdefault((settings[row.dataset_id], row.algo), []).append(row.cs_len)
    summaries = []
    for (setting, algo), lengths in groups.items():
        stddev = statistics.stdev(lengths) if len(lengths) > 1 else 0.0
        summaries.append(SummaryLine(setting, algo, len(lengths), statistics.fmean(lengths), stddev))
    return summaries


def run_bench(config: BenchConfig) -> BenchReport:
    """
    Run a bench matrix.

    Args:
        config: Bench matrix (validated here)

    Returns:
        BenchReport

    Raises:
        InvalidResultError: If any result fails the independent check.
        BudgetExceededError: If "exact" is benchmarked on an over-budget dataset.
    """
    config.validate()
    logger = get_logger()
    dea = DEAConfig(search_range=config.search_range, cell_budget=config.cell_budget)
    dea.validate()

    jobs = build_jobs(config)
    logger.info(
        f"bench: {len(jobs)} datasets x {len(config.algorithms)} algorithms "
        f"(workers={config.workers})"
    )

    if config.workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=config.workers) as executor:
            per_job = list(
                executor.map(
                    run_job,
                    jobs,
                    [config.algorithms] * len(jobs),
                    [dea] * len(jobs),
                )
            )
    else:
        per_job = [run_job(job, config.algorithms, dea) for job in jobs]

    rows = [row for job_rows in per_job for row in job_rows]
    settings = {job.dataset_id: job.setting for job in jobs}
    summaries = summarize(rows, settings)
    for line in summaries:
        logger.info(f"bench {line.setting} {line.algo}: {line.mean:.2f} ({line.stddev:.2f})")
    return BenchReport(rows, summaries, settings)


def write_csv(report: BenchReport, stream: TextIO, timing: bool = False) -> None:
    """Write rows and '#' summary lines as CSV with '\\n' line endings."""
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for row in report.rows:
        writer.writerow(row.as_csv(timing))
    for line in report.summaries:
        stream.write(line.format() + "\n")
