"""
Command-line entry point: ``dea-lcs``.

Subcommands:
    gen      write seeded random datasets
    solve    run one algorithm on a dataset and print a JSON report
    bench    run a matrix of datasets x algorithms and print CSV
    bounds   upper bound on the LCS length and performance ratios
    analyze  evaluate the search-range formulas or the expected-length simulation

Exit codes: 0 success, 1 usage or domain error, 2 parse error,
3 resource budget exceeded. Logs go to stderr.
"""

import argparse
import math
import sys
from pathlib import Path
from typing import Callable, Optional

from dealcs import __version__
from dealcs.analysis.montecarlo import estimate_pairwise_elcs
from dealcs.analysis.search_range import (
    RangeQuery,
    existence_probability,
    existence_probability_uniform,
    expected_lcs_estimate,
    range_for_probability,
    range_for_probability_uniform,
    range_lower_bound,
    search_range_table,
)
from dealcs.baselines.bounds import upper_bound
from dealcs.core.config import DEFAULT_CELL_BUDGET, Algorithm, DEAConfig, PoolMode
from dealcs.core.exceptions import DEAError, InvalidResultError, UsageError
from dealcs.core.solver import solve_with
from dealcs.datagen.generators import Distribution, GenSpec, generate_batch
from dealcs.utils.logging import get_logger, setup_logging

from .bench import BenchConfig, run_bench, write_csv
from .io import InputFormat, format_dataset, parse_input
from .report import bounds_report, render, solve_report

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_PARSE = 2


class ArgumentParser(argparse.ArgumentParser):
    """ArgumentParser that raises UsageError instead of exiting."""

    def error(self, message: str):  # type: ignore[override]
        raise UsageError(f"{self.prog}: {message}")


def _algorithms(text: str) -> list[str]:
    names = [name.strip() for name in text.split(",") if name.strip()]
    valid = {a.value for a in Algorithm}
    for name in names:
        if name not in valid:
            raise argparse.ArgumentTypeError(
                f"unknown algorithm {name!r} (choose from {', '.join(sorted(valid))})"
            )
    if not names:
        raise argparse.ArgumentTypeError("at least one algorithm is required")
    return names


def _numbers(cast: Callable) -> Callable[[str], list]:
    def parse(text: str) -> list:
        try:
            return [cast(item) for item in text.split(",") if item.strip()]
        except ValueError as e:
            raise argparse.ArgumentTypeError(f"invalid list {text!r}") from e

    return parse


def _write(text: str, out: Optional[str]) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


# ----------------------------------------------------------------------
# Subcommands
# ----------------------------------------------------------------------


def _read_dataset(args: argparse.Namespace):
    return parse_input(
        args.inputs,
        args.format,
        alphabet=args.alphabet,
        drop_unknown=args.drop_unknown,
        truncate=args.truncate,
    )


def _dea_config(args: argparse.Namespace) -> DEAConfig:
    config = DEAConfig(
        search_range=getattr(args, "search_range", None),
        cell_budget=args.cell_budget,
        workers=getattr(args, "workers", 1),
        extension=not getattr(args, "no_extension", False),
        pool_mode=getattr(args, "pool", PoolMode.FULL.value),
        log_level=args.log_level,
    )
    config.validate()
    return config


def cmd_gen(args: argparse.Namespace) -> int:
    """Write generated datasets."""
    spec = GenSpec(args.k, args.n, args.sigma, args.distribution, args.seed, args.beta)
    datasets = generate_batch(spec, args.count)
    if len(datasets) == 1:
        _write(format_dataset(datasets[0], args.format), args.out)
        return EXIT_OK

    if not args.out:
        raise UsageError("gen --count > 1 needs --out DIRECTORY")
    directory = Path(args.out)
    directory.mkdir(parents=True, exist_ok=True)
    suffix = "fa" if args.format == InputFormat.FASTA.value else "txt"
    for i, dataset in enumerate(datasets):
        (directory / f"dataset_{i:03d}.{suffix}").write_text(
            format_dataset(dataset, args.format), encoding="utf-8"
        )
    get_logger().info(f"wrote {len(datasets)} datasets to {directory}")
    return EXIT_OK


def cmd_solve(args: argparse.Namespace) -> int:
    """Solve one dataset and print its JSON report."""
    dataset = _read_dataset(args)
    config = _dea_config(args)
    result = solve_with(dataset, args.algo, config)
    report = solve_report(result, dataset, config, seed=args.seed)
    if not report["valid"]:
        raise InvalidResultError(
            f"{args.algo} returned a non-common subsequence", algorithm=args.algo
        )
    _write(render(report), args.out)
    return EXIT_OK


def cmd_bench(args: argparse.Namespace) -> int:
    """Run a bench matrix and print CSV."""
    if args.config:
        config = BenchConfig.from_file(args.config)
        config.timing = config.timing or args.timing
        if args.workers is not None:
            config.workers = args.workers
    else:
        missing = [flag for flag in ("k", "n", "sigma") if getattr(args, flag) is None]
        if missing:
            raise UsageError(f"bench needs --config or --{' --'.join(missing)}")
        config = BenchConfig(
            settings=[
                GenSpec(args.k, args.n, args.sigma, args.distribution, args.seed, args.beta)
            ],
            algorithms=tuple(args.algo),
            reps=args.reps,
            seed=args.seed,
            workers=args.workers or 1,
            timing=args.timing,
            search_range=args.search_range,
            cell_budget=args.cell_budget,
        )

    report = run_bench(config)
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as stream:
            write_csv(report, stream, config.timing)
    else:
        write_csv(report, sys.stdout, config.timing)
    return EXIT_OK


def cmd_bounds(args: argparse.Namespace) -> int:
    """Print the upper bound and the ratio of each requested algorithm."""
    dataset = _read_dataset(args)
    config = _dea_config(args)
    bounds = upper_bound(dataset, args.cell_budget, compute_exact=args.exact)
    results = [solve_with(dataset, algo, config) for algo in args.algo]
    _write(render(bounds_report(bounds, dataset, results)), args.out)
    return EXIT_OK


def _need(args: argparse.Namespace, *names: str) -> None:
    missing = [name for name in names if getattr(args, name) is None]
    if missing:
        flags = " ".join(f"--{name}" for name in missing)
        raise UsageError(f"analyze {args.formula} needs {flags}")


def _analyze_rows(args: argparse.Namespace) -> list[tuple[str, object]]:
    formula = _FORMULA_ALIASES.get(args.formula, args.formula)
    if formula == "range-lower-bound":
        _need(args, "n", "elcs")
        return [("n", args.n), ("elcs", args.elcs), ("L", range_lower_bound(args.n, args.elcs))]
    if formula == "existence":
        _need(args, "r", "L", "k")
        return [
            ("r", args.r),
            ("L", args.L),
            ("k", args.k),
            ("P", round(existence_probability(args.r, args.L, args.k), 6)),
        ]
    if formula == "range":
        _need(args, "P", "k", "r")
        value = range_for_probability(args.P, args.k, args.r)
        return [("P", args.P), ("k", args.k), ("r", args.r), ("L", round(value, 2)),
                ("ceil", math.ceil(value))]
    if formula == "existence-uniform":
        _need(args, "sigma", "L", "k")
        return [
            ("sigma", args.sigma),
            ("L", args.L),
            ("k", args.k),
            ("P", round(existence_probability_uniform(args.sigma, args.L, args.k), 6)),
        ]
    if formula == "range-uniform":
        _need(args, "P", "k", "sigma")
        value = range_for_probability_uniform(args.P, args.k, args.sigma)
        return [("P", args.P), ("k", args.k), ("sigma", args.sigma), ("L", round(value, 2)),
                ("ceil", math.ceil(value))]
    if formula == "expected-length":
        _need(args, "n", "L")
        return [("n", args.n), ("L", args.L), ("E", expected_lcs_estimate(args.n, args.L))]
    if formula == "elcs":
        _need(args, "n", "sigma")
        estimate = estimate_pairwise_elcs(args.n, args.sigma, args.trials, args.seed)
        return [
            ("n", args.n),
            ("sigma", args.sigma),
            ("trials", estimate.trials),
            ("mean", round(estimate.mean, 2)),
            ("stddev", round(estimate.stddev, 2)),
        ]

    # table
    _need(args, "P", "k_values")
    if (args.r_values is None) == (args.sigma_values is None):
        raise UsageError("analyze table needs exactly one of --r-values or --sigma-values")
    rows: list[tuple[str, object]] = []
    for row in search_range_table(args.P, args.k_values, args.r_values, args.sigma_values):
        key = f"k={row.k} r={row.r}" if row.r is not None else f"k={row.k} sigma={row.sigma}"
        rows.append((key, f"{row.search_range:.2f} (ceil {row.required_range})"))
    return rows


def cmd_analyze(args: argparse.Namespace) -> int:
    """Evaluate one formula and print a small table."""
    rows = _analyze_rows(args)
    width = max(len(key) for key, _ in rows)
    text = "".join(f"{key:<{width}}  {value}\n" for key, value in rows)
    _write(text, args.out)
    return EXIT_OK


# Short eqN aliases for the long formula names
_FORMULA_ALIASES = {
    "eq5": "range-lower-bound",
    "eq6": "existence",
    "eq7": "range",
    "eq8": "existence-uniform",
    "eq9": "range-uniform",
    "eq10": "expected-length",
}
_FORMULAS = (
    "range-lower-bound",
    "existence",
    "range",
    "existence-uniform",
    "range-uniform",
    "expected-length",
    "elcs",
    "table",
)


# ----------------------------------------------------------------------
# Parser
# ----------------------------------------------------------------------


def _add_input_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("inputs", nargs="+", help="Dataset file(s)")
    parser.add_argument(
        "--format",
        choices=[f.value for f in InputFormat],
        default=InputFormat.LINES.value,
        help="Input format (default: lines)",
    )
    parser.add_argument("--alphabet", help="Declared alphabet, e.g. ACGT (default: inferred)")
    parser.add_argument(
        "--drop-unknown", action="store_true", help="Drop symbols outside --alphabet"
    )
    parser.add_argument("--truncate", type=int, help="Keep the first N symbols of each sequence")


def _add_solver_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--search-range", type=int, help="Single search range L (default: sweep)")
    parser.add_argument(
        "--cell-budget",
        type=int,
        default=DEFAULT_CELL_BUDGET,
        help=f"Exact DP cell budget (default: {DEFAULT_CELL_BUDGET})",
    )
    parser.add_argument("--workers", type=int, default=1, help="Threads for template extension")
    parser.add_argument(
        "--no-extension", action="store_true", help="Report the best raw template"
    )
    parser.add_argument(
        "--pool",
        choices=[m.value for m in PoolMode],
        default=PoolMode.FULL.value,
        help="Template pool contents (default: full)",
    )


def _add_gen_flags(parser: argparse.ArgumentParser, required: bool) -> None:
    parser.add_argument("--k", type=int, required=required, help="Number of sequences")
    parser.add_argument("--n", type=int, required=required, help="Sequence length")
    parser.add_argument("--sigma", type=int, required=required, help="Alphabet size")
    parser.add_argument(
        "--distribution",
        choices=[d.value for d in Distribution],
        default=Distribution.UNIFORM.value,
    )
    parser.add_argument("--beta", type=float, help="Content of the first two symbols (beta_skew)")
    parser.add_argument("--seed", type=int, default=0, help="64-bit generator seed (default: 0)")


def build_parser() -> ArgumentParser:
    """Build the dea-lcs argument parser."""
    parser = ArgumentParser(
        prog="dea-lcs",
        description="Longest common subsequence of many sequences by Deposition and Extension",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument(
        "--log-level",
        default="WARNING",
        type=str.upper,
        choices=["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"],
    )
    parser.add_argument("--log-file", help="Also write logs to this file")
    sub = parser.add_subparsers(dest="command", metavar="COMMAND")
    sub.required = True

    gen = sub.add_parser("gen", help="Generate seeded random datasets")
    _add_gen_flags(gen, required=True)
    gen.add_argument("--count", type=int, default=1, help="Number of datasets")
    gen.add_argument(
        "--format",
        choices=[InputFormat.LINES.value, InputFormat.FASTA.value],
        default=InputFormat.LINES.value,
    )
    gen.add_argument("--out", help="Output file (directory when --count > 1)")
    gen.set_defaults(handler=cmd_gen)

    solve = sub.add_parser("solve", help="Solve a dataset and print a JSON report")
    _add_input_flags(solve)
    solve.add_argument(
        "--algo", choices=[a.value for a in Algorithm], default=Algorithm.DEA.value
    )
    _add_solver_flags(solve)
    solve.add_argument("--seed", type=int, help="Seed echoed in the report")
    solve.add_argument("--out", help="Write the report here instead of stdout")
    solve.set_defaults(handler=cmd_solve)

    bench = sub.add_parser("bench", help="Benchmark algorithms over generated datasets")
    bench.add_argument("--config", help="JSON bench matrix")
    _add_gen_flags(bench, required=False)
    bench.add_argument("--reps", type=int, default=10, help="Datasets per setting")
    bench.add_argument(
        "--algo",
        type=_algorithms,
        default=[Algorithm.LONGRUN.value, Algorithm.DEA_MC.value],
        help="Comma-separated algorithms (default: longrun,dea-mc)",
    )
    bench.add_argument("--search-range", type=int, help="Single search range L for DEA")
    bench.add_argument("--cell-budget", type=int, default=DEFAULT_CELL_BUDGET)
    bench.add_argument("--workers", type=int, help="Worker processes (default: 1)")
    bench.add_argument("--timing", action="store_true", help="Write elapsed_ms values")
    bench.add_argument("--out", help="Write CSV here instead of stdout")
    bench.set_defaults(handler=cmd_bench)

    bounds = sub.add_parser("bounds", help="Upper bound and performance ratios")
    _add_input_flags(bounds)
    _add_solver_flags(bounds)
    bounds.add_argument(
        "--algo",
        type=_algorithms,
        default=[Algorithm.DEA.value, Algorithm.LONGRUN.value],
        help="Comma-separated algorithms to rate (default: dea,longrun)",
    )
    bounds.add_argument("--exact", action="store_true", help="Also compute the exact LCS length")
    bounds.add_argument("--out", help="Write the report here instead of stdout")
    bounds.set_defaults(handler=cmd_bounds)

    analyze = sub.add_parser("analyze", help="Search-range formulas and simulations")
    analyze.add_argument("formula", choices=list(_FORMULAS) + list(_FORMULA_ALIASES))
    analyze.add_argument("--P", type=float, help="Existence probability")
    analyze.add_argument("--k", type=int, help="Number of sequences")
    analyze.add_argument("--r", type=float, help="Symbol content")
    analyze.add_argument("--sigma", type=int, help="Alphabet size")
    analyze.add_argument("--L", type=int, help="Search range")
    analyze.add_argument("--n", type=int, help="Sequence length")
    analyze.add_argument("--elcs", type=float, help="Expected LCS length")
    analyze.add_argument("--trials", type=int, default=300, help="Simulation trials")
    analyze.add_argument("--seed", type=int, default=0, help="Simulation seed")
    analyze.add_argument("--k-values", type=_numbers(int), help="Comma-separated k grid")
    analyze.add_argument("--r-values", type=_numbers(float), help="Comma-separated r grid")
    analyze.add_argument("--sigma-values", type=_numbers(int), help="Comma-separated sigma grid")
    analyze.add_argument("--out", help="Write the table here instead of stdout")
    analyze.set_defaults(handler=cmd_analyze)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    """
    Run the command line.

    Args:
        argv: Arguments without the program name (default: sys.argv[1:])

    Returns:
        Process exit code
    """
    try:
        args = build_parser().parse_args(argv)
        setup_logging(level=args.log_level, log_file=args.log_file)
        return args.handler(args)
    except DEAError as e:
        print(f"error: {e}", file=sys.stderr)
        return e.exit_code
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_PARSE
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


def run() -> None:
    """Console-script entry point."""
    sys.exit(main())


if __name__ == "__main__":
    run()
