"""Tests for the benchmark harness."""

import io
import json

import pytest

from dealcs.cli.bench import (
    CSV_COLUMNS,
    BenchConfig,
    BenchRow,
    InputSpec,
    build_jobs,
    run_bench,
    summarize,
    write_csv,
)
from dealcs.core.config import Algorithm
from dealcs.core.exceptions import GeneratorSpecError
from dealcs.datagen.generators import GenSpec


def _config(**overrides) -> BenchConfig:
    values = {
        "settings": [GenSpec(4, 20, 4, "uniform", seed=5)],
        "algorithms": ("longrun", "dea-mc", "greedy"),
        "reps": 3,
        "seed": 5,
    }
    values.update(overrides)
    return BenchConfig(**values)


def _csv(config: BenchConfig) -> str:
    stream = io.StringIO()
    write_csv(run_bench(config), stream, config.timing)
    return stream.getvalue()


class TestBenchConfig:
    """Tests for BenchConfig."""

    def test_validate_normalizes(self):
        """Algorithm names become Algorithm members, deduplicated."""
        config = _config(algorithms=("longrun", "longrun", "dea"))
        config.validate()
        assert config.algorithms == (Algorithm.LONGRUN, Algorithm.DEA)

    def test_empty_matrix(self):
        """A bench needs something to run on."""
        with pytest.raises(ValueError, match="at least one generator setting"):
            BenchConfig().validate()

    def test_unknown_algorithm(self):
        """Unknown algorithms are rejected."""
        with pytest.raises(ValueError, match="Unknown algorithm"):
            _config(algorithms=("magic",)).validate()

    def test_invalid_reps(self):
        """reps must be positive."""
        with pytest.raises(ValueError, match="reps must be >= 1"):
            _config(reps=0).validate()

    def test_invalid_setting(self):
        """Generator settings are validated too."""
        with pytest.raises(GeneratorSpecError):
            _config(settings=[GenSpec(0, 5, 4)]).validate()

    def test_from_file(self, tmp_path):
        """JSON matrices set defaults for missing keys."""
        path = tmp_path / "matrix.json"
        path.write_text(
            json.dumps(
                {
                    "seed": 7,
                    "reps": 2,
                    "algorithms": ["longrun"],
                    "settings": [{"k": 3, "n": 10, "sigma": 4, "distribution": "beta_skew", "beta": 0.3}],
                }
            ),
            encoding="utf-8",
        )
        config = BenchConfig.from_file(str(path))
        assert config.reps == 2
        assert config.settings[0].seed == 7
        assert config.settings[0].beta == 0.3
        assert config.workers == 1

    def test_from_file_invalid_json(self, tmp_path):
        """Broken JSON is a ValueError with the position."""
        path = tmp_path / "matrix.json"
        path.write_text("{", encoding="utf-8")
        with pytest.raises(ValueError, match="invalid JSON"):
            BenchConfig.from_file(str(path))


class TestRunBench:
    """Tests for run_bench and write_csv."""

    def test_rows_and_summaries(self):
        """One row per dataset and algorithm, one summary per setting and algorithm."""
        report = run_bench(_config())
        assert len(report.rows) == 9
        assert [row.dataset_id for row in report.rows[:3]] == ["s0-r0"] * 3
        assert all(row.valid for row in report.rows)
        assert len(report.summaries) == 3
        assert {line.count for line in report.summaries} == {3}

    def test_dea_not_below_long_run(self):
        """On every dataset DEA is at least Long Run."""
        report = run_bench(_config())
        by_dataset = {}
        for row in report.rows:
            by_dataset.setdefault(row.dataset_id, {})[row.algo] = row.cs_len
        for lengths in by_dataset.values():
            assert lengths["dea-mc"] >= lengths["longrun"]

    def test_csv_layout(self):
        """Header, rows with n/a for untimed columns, then summary lines."""
        lines = _csv(_config()).splitlines()
        assert lines[0] == ",".join(CSV_COLUMNS)
        first = lines[1].split(",")
        assert first[0] == "s0-r0"
        assert first[4] == "longrun"
        assert first[6] == "true"
        assert first[7] == "n/a"
        assert first[8] == "5"
        assert first[9] == "n/a"
        summaries = [line for line in lines if line.startswith("#")]
        assert len(summaries) == 3
        assert summaries[0].startswith("# s0:uniform-k4-n20-s4,longrun,n=3,")

    def test_csv_is_byte_identical(self):
        """Two runs with the same seed write the same CSV."""
        assert _csv(_config()) == _csv(_config())

    def test_workers_do_not_change_csv(self):
        """Process workers keep matrix order."""
        assert _csv(_config(workers=2)) == _csv(_config())

    def test_timing_column(self):
        """Timing fills elapsed_ms."""
        lines = _csv(_config(timing=True)).splitlines()
        assert lines[1].split(",")[7] != "n/a"

    def test_input_files(self, tmp_path):
        """Input files join the matrix as their own datasets."""
        path = tmp_path / "seqs.txt"
        path.write_text("ACAC\nCACA\n", encoding="utf-8")
        config = BenchConfig(inputs=[InputSpec(paths=[str(path)])], algorithms=("dea",))
        jobs = build_jobs(config)
        assert [job.dataset_id for job in jobs] == ["in0"]
        report = run_bench(config)
        assert report.rows[0].cs_len == 3
        assert report.rows[0].seed is None


class TestSummarize:
    """Tests for summarize and BenchRow."""

    def test_mean_and_stddev(self):
        """Sample standard deviation, zero for a single value."""
        rows = [
            BenchRow("a", 2, 5, 4, "longrun", length, True, 0.0, 1, None)
            for length in (2, 4, 6)
        ]
        rows.append(BenchRow("b", 2, 5, 4, "dea", 3, True, 0.0, 1, 5))
        settings = {"a": "s0", "b": "s1"}
        lines = summarize(rows, settings)
        assert lines[0].mean == 4.0
        assert lines[0].stddev == 2.0
        assert lines[0].format() == "# s0,longrun,n=3,4.00 (2.00)"
        assert lines[1].stddev == 0.0

    def test_row_cells(self):
        """CSV cells in column order."""
        row = BenchRow("s0-r1", 3, 10, 4, "dea", 7, True, 12.3456, 9, 5)
        assert row.as_csv() == ["s0-r1", "3", "10", "4", "dea", "7", "true", "n/a", "9", "5"]
        assert row.as_csv(timing=True)[7] == "12.346"
