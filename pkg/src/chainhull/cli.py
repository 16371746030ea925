"""Command-line front end: ``chainhull {hull,gen,verify,bench}``.

Exit status is 0 on success, 2 for usage or input errors (bad flags, missing
or malformed input files) and 1 for anything else, including a failed
verification.
"""

from __future__ import annotations

import argparse
import csv
import statistics
import sys
import time

from . import __version__
from .datasets import DISTRIBUTIONS, FORMATS, DatasetSpec, generate, read_points, write_hull, write_points, write_stats
from .errors import ChainHullError, IoError, NonFiniteCoordinate, ParseError
from .oracle import hull_oracle
from .pipeline import STATS_COLUMNS, PipelineConfig, convex_hull

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class InputError(Exception):
    """Problem with user-supplied input; maps to exit status 2."""


def _int_list(text: str) -> list[int]:
    try:
        return [int(float(tok)) for tok in text.split(",") if tok.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _count(text: str) -> int:
    try:
        return int(float(text))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None


def _threads(text: str):
    if text == "auto":
        return "auto"
    value = _count(text)
    if value < 1:
        raise argparse.ArgumentTypeError("threads must be >= 1 or 'auto'")
    return value


def _load(path, fmt):
    try:
        return read_points(path, fmt)
    except (ParseError, NonFiniteCoordinate) as exc:
        raise InputError(str(exc)) from exc
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror or exc}") from exc


def run_hull(args) -> int:
    points = _load(args.input, args.format)
    if len(points) == 0:
        raise InputError(f"{args.input}: no points")
    config = PipelineConfig(chunk_count=args.chunk_count, parallelism=args.threads)
    hull, stats = convex_hull(points, config)
    if args.output:
        write_hull(hull, args.output)
    else:
        for x, y in hull.vertices:
            sys.stdout.write(f"{x:.17g} {y:.17g}\n")
    if args.stats_output:
        fmt = args.stats_format or ("json" if str(args.stats_output).endswith(".json") else "csv")
        write_stats(stats, args.stats_output, fmt)
    return EXIT_OK


def run_gen(args) -> int:
    points = generate(DatasetSpec(args.distribution, args.n, args.seed))
    write_points(points, args.output, args.format)
    return EXIT_OK


def _verify_cases(args):
    if args.input:
        yield None, _load(args.input, args.format)
        return
    for i in range(args.trials):
        seed = args.seed + i
        yield seed, generate(DatasetSpec(args.distribution, args.n, seed))


def run_verify(args) -> int:
    failures = []
    total = 0
    for trial, (seed, points) in enumerate(_verify_cases(args)):
        expected = hull_oracle(points)
        for chunk_count in args.chunk_counts:
            total += 1
            config = PipelineConfig(chunk_count=chunk_count, parallelism=args.threads)
            hull, stats = convex_hull(points, config)
            ok = hull.vertices == expected.vertices
            label = f"seed={seed}" if seed is not None else f"input={args.input}"
            print(f"trial {trial} {label} chunk_count={chunk_count}: "
                  f"{'pass' if ok else 'FAIL'} n_hull={stats.n_hull} oracle={len(expected)}")
            if not ok:
                failures.append(label)
    print(f"{total - len(failures)}/{total} passed")
    if failures:
        print(f"first failure: {failures[0]}", file=sys.stderr)
        return EXIT_FAIL
    return EXIT_OK


BENCH_COLUMNS = ("size", "seed", "repeat") + STATS_COLUMNS + ("frac_after_round1", "frac_after_spa", "t_oracle_ms")


def bench_rows(sizes, distribution, seeds, repeats, config, oracle_baseline=False):
    """Yield one dict per (size, seed, repeat) run, keyed by ``BENCH_COLUMNS``."""
    for size in sizes:
        for seed in seeds:
            points = generate(DatasetSpec(distribution, size, seed))
            for rep in range(repeats):
                _, stats = convex_hull(points, config)
                row = {"size": size, "seed": seed, "repeat": rep, **stats.as_row()}
                row["frac_after_round1"] = stats.n_after_round1 / stats.n_input
                row["frac_after_spa"] = stats.n_after_spa / stats.n_input
                row["t_oracle_ms"] = ""
                if oracle_baseline:
                    t0 = time.perf_counter()
                    hull_oracle(points)
                    row["t_oracle_ms"] = (time.perf_counter() - t0) * 1e3
                yield row


def run_bench(args) -> int:
    config = PipelineConfig(chunk_count=args.chunk_count, parallelism=args.threads)
    out = sys.stdout
    if args.csv_output:
        try:
            out = open(args.csv_output, "w", newline="", encoding="utf-8")
        except OSError as exc:
            raise IoError(f"cannot write {args.csv_output}: {exc.strerror or exc}") from exc
    totals: dict[int, list[float]] = {}
    try:
        writer = csv.DictWriter(out, fieldnames=BENCH_COLUMNS)
        writer.writeheader()
        for row in bench_rows(args.sizes, args.distribution, args.seeds, args.repeats, config,
                              args.oracle_baseline):
            writer.writerow(row)
            totals.setdefault(row["size"], []).append(row["t_total_ms"])
    finally:
        if out is not sys.stdout:
            out.close()
    for size, ts in totals.items():
        print(f"size={size} median_total_ms={statistics.median(ts):.3f} runs={len(ts)}", file=sys.stderr)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="chainhull", description="Data-parallel 2D convex hull.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("hull", help="compute the convex hull of a point file")
    p.add_argument("--input", required=True)
    p.add_argument("--format", choices=FORMATS, default="xy_text")
    p.add_argument("--chunk-count", type=_count, default=1024)
    p.add_argument("--threads", type=_threads, default="auto")
    p.add_argument("--output", help="hull file (xy_text); stdout if omitted")
    p.add_argument("--stats-output")
    p.add_argument("--stats-format", choices=("csv", "json"))
    p.set_defaults(func=run_hull)

    p = sub.add_parser("gen", help="generate a synthetic point set")
    p.add_argument("--distribution", choices=DISTRIBUTIONS, default="uniform_square")
    p.add_argument("--n", type=_count, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--output", required=True)
    p.add_argument("--format", choices=FORMATS, default="xy_text")
    p.set_defaults(func=run_gen)

    p = sub.add_parser("verify", help="compare the pipeline against the reference hull")
    p.add_argument("--input")
    p.add_argument("--format", choices=FORMATS, default="xy_text")
    p.add_argument("--distribution", choices=DISTRIBUTIONS, default="uniform_square")
    p.add_argument("--n", type=_count, default=10000)
    p.add_argument("--seed", type=int, default=0, help="seed of the first trial")
    p.add_argument("--trials", type=_count, default=1)
    p.add_argument("--chunk-counts", type=_int_list, default=[1, 4, 1024])
    p.add_argument("--threads", type=_threads, default="auto")
    p.set_defaults(func=run_verify)

    p = sub.add_parser("bench", help="time the pipeline stages and write CSV")
    p.add_argument("--sizes", type=_int_list, required=True)
    p.add_argument("--distribution", choices=DISTRIBUTIONS, default="uniform_square")
    p.add_argument("--seeds", type=_int_list, default=[0])
    p.add_argument("--repeats", type=_count, default=1)
    p.add_argument("--chunk-count", type=_count, default=1024)
    p.add_argument("--threads", type=_threads, default="auto")
    p.add_argument("--csv-output")
    p.add_argument("--oracle-baseline", action="store_true",
                   help="also time the reference monotone-chain hull")
    p.set_defaults(func=run_bench)
    return parser


def _validate(parser, args) -> None:
    if args.command == "verify":
        if args.trials < 1:
            parser.error("--trials must be >= 1")
        if not args.chunk_counts or min(args.chunk_counts) < 1:
            parser.error("--chunk-counts must list positive integers")
        if args.n < 1:
            parser.error("--n must be >= 1")
    elif args.command == "bench":
        if not args.sizes or min(args.sizes) < 1:
            parser.error("--sizes must list positive integers")
        if args.repeats < 1 or not args.seeds:
            parser.error("--repeats must be >= 1 and --seeds non-empty")
    elif args.command == "gen" and args.n < 1:
        parser.error("--n must be >= 1")
    if getattr(args, "chunk_count", 1) < 1:
        parser.error("--chunk-count must be >= 1")


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        _validate(parser, args)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"chainhull: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ChainHullError as exc:
        print(f"chainhull: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except Exception as exc:  # noqa: BLE001
        print(f"chainhull: internal error: {exc!r}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
