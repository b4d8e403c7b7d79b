"""Command-line front end.

    dodgson det FILE [--method M] [--trace OUT.jsonl] [--stats]
    dodgson random --n N [--seed S] [--range B] [--count C]
    dodgson check (FILE | --random-suite N,COUNT,SEED) [--range B] [--jobs J]
    dodgson bench [--n-list 4,6,8] [--count C] [--seed S] [--methods ...] [--plot OUT.png]

Exit codes: 0 success, 1 cross-check disagreement, 2 unreadable or malformed
input, 3 strict condensation hit a zero divisor.
"""
from __future__ import annotations

import argparse
import sys
from concurrent.futures import ProcessPoolExecutor

from .bench import bench, to_csv
from .driver import Strategy, cross_check_values, determinant
from .matrixio import (MatrixParseError, allow_big_ints, format_matrices,
                       format_matrix, read_matrices, write_trace)
from .randmat import random_matrices, random_suite

EXIT_OK, EXIT_DISAGREE, EXIT_PARSE, EXIT_STRICT_FAIL = 0, 1, 2, 3


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _methods(text: str) -> list[Strategy]:
    try:
        return [Strategy.parse(x.strip()) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"unknown method in {text!r}")


def _nonneg(text: str) -> int:
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError("must be >= 0")
    return v


def _pos(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return v


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="dodgson", description=__doc__.split("\n\n")[0])
    sub = p.add_subparsers(dest="command", required=True)

    d = sub.add_parser("det", help="determinant of the matrix in FILE")
    d.add_argument("path")
    d.add_argument("--method", default=Strategy.HYBRID.value,
                   choices=[s.value for s in Strategy])
    d.add_argument("--trace", metavar="OUT.jsonl")
    d.add_argument("--stats", action="store_true", help="op and repair counts on stderr")

    r = sub.add_parser("random", help="seeded random matrices on stdout")
    r.add_argument("--n", type=_pos, required=True)
    r.add_argument("--seed", type=_nonneg, default=0)
    r.add_argument("--range", dest="bound", type=_nonneg, default=5)
    r.add_argument("--count", type=_pos, default=1)

    c = sub.add_parser("check", help="cross-check every strategy")
    src = c.add_mutually_exclusive_group(required=True)
    src.add_argument("path", nargs="?")
    src.add_argument("--random-suite", type=_int_list, metavar="N,COUNT,SEED")
    c.add_argument("--range", dest="bound", type=_nonneg, default=5)
    c.add_argument("--jobs", type=_pos, default=1)

    b = sub.add_parser("bench", help="CSV of mean ops and wall time per (method, n)")
    b.add_argument("--n-list", type=_int_list, default=[4, 6, 8, 12, 16])
    b.add_argument("--count", type=_pos, default=10)
    b.add_argument("--seed", type=_nonneg, default=0)
    b.add_argument("--methods", type=_methods, default=[Strategy.HYBRID, Strategy.BAREISS])
    b.add_argument("--range", dest="bound", type=_nonneg, default=5)
    b.add_argument("--plot", metavar="OUT.png", help="also render a figure")
    return p


def cmd_det(args, out, err) -> int:
    try:
        mats = read_matrices(args.path)
    except MatrixParseError as exc:
        print(f"error: {exc}", file=err)
        return EXIT_PARSE
    if len(mats) != 1:
        print(f"error: expected one matrix, found {len(mats)}", file=err)
        return EXIT_PARSE
    a = mats[0]
    if not a.is_square:
        print("error: matrix is not square", file=err)
        return EXIT_PARSE
    report = determinant(a, args.method)
    if args.trace:
        write_trace(report.trace, args.trace)
    if args.stats:
        ops = report.ops
        print(f"multiplications={ops.multiplications} subtractions={ops.subtractions} "
              f"divisions={ops.divisions} total={ops.total} "
              f"repairs={report.repairs} fallbacks={report.fallbacks} "
              f"zeros={len(report.failures)}", file=err)
    if report.determinant is None:
        site = (report.irreparable or report.failures)[-1]
        print(f"{report.strategy_used.value} failed: zero divisor at level {site.level} "
              f"site ({site.row},{site.col})", file=err)
        return EXIT_STRICT_FAIL
    print(report.determinant, file=out)
    return EXIT_OK


def cmd_random(args, out, err) -> int:
    mats = random_matrices(args.n, args.seed, args.count, args.bound)
    out.write(format_matrices(mats))
    return EXIT_OK


def _check_one(a):
    return cross_check_values(a)


def cmd_check(args, out, err) -> int:
    if args.random_suite is not None:
        if len(args.random_suite) != 3:
            print("error: --random-suite takes N,COUNT,SEED", file=err)
            return EXIT_PARSE
        n, count, seed = args.random_suite
        mats = list(random_suite(n, count, seed, args.bound))
    else:
        try:
            mats = read_matrices(args.path)
        except MatrixParseError as exc:
            print(f"error: {exc}", file=err)
            return EXIT_PARSE
    if args.jobs > 1:
        with ProcessPoolExecutor(args.jobs) as pool:
            results = list(pool.map(_check_one, mats, chunksize=32))
    else:
        results = [_check_one(a) for a in mats]
    failed = 0
    for idx, (a, values) in enumerate(zip(mats, results), 1):
        dets = {v for v in values.values() if v is not None}
        summary = " ".join(f"{s.value}={'-' if v is None else v}" for s, v in values.items())
        if len(dets) == 1:
            print(f"PASS {idx} n={a.order} det={dets.pop()} [{summary}]", file=out)
        else:
            failed += 1
            print(f"FAIL {idx} n={a.order} [{summary}]", file=out)
            out.write(format_matrix(a))
    print(f"checked {len(mats)}: {len(mats) - failed} passed, {failed} failed", file=out)
    return EXIT_DISAGREE if failed else EXIT_OK


def cmd_bench(args, out, err) -> int:
    if any(n < 1 for n in args.n_list):
        print("error: orders must be positive", file=err)
        return EXIT_PARSE
    rows = bench(args.n_list, args.count, args.seed, args.methods, args.bound)
    out.write(to_csv(rows))
    if args.plot:
        from .plotting import plot_bench
        plot_bench(rows, args.plot)
        print(f"wrote {args.plot}", file=err)
    return EXIT_OK


COMMANDS = {"det": cmd_det, "random": cmd_random, "check": cmd_check, "bench": cmd_bench}


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    allow_big_ints()
    args = build_parser().parse_args(argv)
    return COMMANDS[args.command](args, out, err)


if __name__ == "__main__":
    sys.exit(main())
