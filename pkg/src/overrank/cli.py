"""Command-line front end: ``overrank <subcommand> [flags]``.

Exit status: 0 all checks pass, 1 a verification failed, 2 bad flags,
3 engine error, 4 output could not be written.
"""

from __future__ import annotations

import argparse
import sys
from concurrent.futures import ThreadPoolExecutor
from contextlib import contextmanager
from fractions import Fraction

from . import asymptotics, combinatorics, modular, qseries
from .errors import OverrankError
from .report import ScanReport, Table, emit

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_ENGINE, EXIT_IO = 0, 1, 2, 3, 4


class UsageError(Exception):
    pass


def _fraction(text: str) -> float:
    try:
        return float(Fraction(text))
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a number or fraction: {text!r}")


def _float_list(text: str) -> list:
    return [_fraction(t) for t in text.split(",") if t]


def _int_list(text: str) -> list:
    try:
        return [int(t) for t in text.split(",") if t]
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a comma-separated integer list: {text!r}")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("csv", "json"), default="csv")
    common.add_argument("--out", help="output file (default: standard output)")
    common.add_argument("--threads", type=int, default=1, help="worker threads for grid scans")

    def modulus(p):
        p.add_argument("--a", type=int, default=0)
        p.add_argument("--c", type=int, default=3)

    parser = argparse.ArgumentParser(prog="overrank", description="M2-rank statistics of overpartitions.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", parents=[common], help="overpartition counts p-bar(n)")
    p.add_argument("--n", type=int, default=200)

    p = sub.add_parser("table", parents=[common], help="rank counts N2(m, n)")
    p.add_argument("--nmax", type=int, default=20)
    p.add_argument("--route", choices=("series", "brute"), default="series")

    p = sub.add_parser("dissect", parents=[common], help="residue counts N2(a, c, n)")
    modulus(p)
    p.add_argument("--nmax", type=int, default=200)
    p.add_argument("--form", choices=("half", "full"), default="half")

    p = sub.add_parser("validate", parents=[common], help="cross-validate all exact routes for n <= nmax")
    p.add_argument("--nmax", type=int, default=30)

    p = sub.add_parser("transforms", parents=[common], help="transformation-law residual grids")
    p.add_argument("--which", choices=("theta", "mu", "h", "appell", "all"), default="all")
    p.add_argument("--level", type=int, default=None, help="Appell level (default: 1, 2 and 3)")
    p.add_argument("--tol", type=float, default=1e-9)

    p = sub.add_parser("limit", parents=[common], help="cone limit of A_1(+-z, tau; 2 tau)")
    p.add_argument("--z", type=_fraction, default=1 / 3)
    p.add_argument("--delta", type=_fraction, default=1.0)
    p.add_argument("--steps", type=int, default=8)
    p.add_argument("--x0", type=_fraction, default=1.0)

    p = sub.add_parser("tauberian", parents=[common], help="Tauberian ratio along a cone ray")
    modulus(p)
    p.add_argument("--eps", type=_float_list, default=[0.4, 0.2, 0.1])
    p.add_argument("--ray", type=_fraction, default=0.0, help="ray slope: eps = x (1 + i ray)")
    p.add_argument("--delta", type=_fraction, default=1.0)
    p.add_argument("--trunc", type=int, default=3000)

    p = sub.add_parser("asym", parents=[common], help="growth ratios N2(a,c,n) 8cn e^{-pi sqrt n}")
    modulus(p)
    p.add_argument("--n", type=_int_list, default=[200, 2000])

    p = sub.add_parser("scan", parents=[common], help="exact inequality scan")
    modulus(p)
    p.add_argument("--kind", choices=asymptotics.KINDS, default="logconcavity")
    p.add_argument("--nmax", type=int, default=200)
    return parser


def _check(cond: bool, message: str) -> None:
    if not cond:
        raise UsageError(message)


def validate_args(args) -> None:
    """Reject inconsistent flag values before any computation starts."""
    _check(args.threads >= 1, "--threads must be >= 1")
    if hasattr(args, "c"):
        _check(args.c >= 3 and args.c % 2 == 1, "--c must be an odd integer >= 3")
        _check(0 <= args.a < args.c, "--a must satisfy 0 <= a < c")
    cmd = args.command
    if cmd == "count":
        _check(args.n >= 0, "--n must be nonnegative")
    elif cmd == "table":
        _check(args.nmax >= 0, "--nmax must be nonnegative")
        if args.route == "brute":
            _check(args.nmax <= combinatorics.ENUMERATION_LIMIT, f"--nmax must be <= {combinatorics.ENUMERATION_LIMIT} for brute force")
    elif cmd == "dissect":
        _check(args.nmax >= 0, "--nmax must be nonnegative")
    elif cmd == "validate":
        _check(0 <= args.nmax <= combinatorics.ENUMERATION_LIMIT, f"--nmax must lie in 0..{combinatorics.ENUMERATION_LIMIT}")
    elif cmd == "transforms":
        _check(args.tol > 0, "--tol must be positive")
        _check(args.level is None or args.level >= 1, "--level must be >= 1")
    elif cmd == "limit":
        _check(0 < args.z < 0.5, "--z must lie in (0, 1/2)")
        _check(args.delta > 0, "--delta must be positive")
        _check(args.steps >= 3, "--steps must be >= 3")
        _check(args.x0 > 0, "--x0 must be positive")
    elif cmd == "tauberian":
        _check(len(args.eps) > 0 and all(e > 0 for e in args.eps), "--eps needs positive values")
        _check(abs(args.ray) <= args.delta, "--ray must satisfy |ray| <= delta")
        _check(args.trunc >= 1, "--trunc must be positive")
    elif cmd == "asym":
        _check(len(args.n) > 0 and all(n >= 0 for n in args.n), "--n needs nonnegative values")
    elif cmd == "scan":
        _check(args.nmax >= 4, "--nmax must be >= 4")


def invocation(args) -> dict:
    skip = {"out", "threads", "format"}
    return {"command": args.command, **{k: v for k, v in sorted(vars(args).items()) if k not in skip and k != "command"}}


@contextmanager
def _mapper(threads: int):
    if threads <= 1:
        yield map
        return
    with ThreadPoolExecutor(max_workers=threads) as pool:
        yield pool.map


def run(args, mapper=map):
    cmd = args.command
    if cmd == "count":
        values = qseries.overpartition_series(args.n + 1)
        return Table("count", ["n", "pbar"], [[n, v] for n, v in enumerate(values)])
    if cmd == "table":
        if args.route == "brute":
            table = combinatorics.RankTable.brute(args.nmax)
        else:
            table = qseries.rank_table(args.nmax)
        rows = [[n, m, table.count(m, n)] for n in range(args.nmax + 1) for m in range(-n, n + 1) if table.count(m, n)]
        return Table("table", ["n", "m", "count"], rows)
    if cmd == "dissect":
        values = qseries.dissection_series(args.a, args.c, args.nmax + 1, args.form)
        return Table("dissect", ["n", "a", "c", "count"], [[n, args.a, args.c, v] for n, v in enumerate(values)])
    if cmd == "validate":
        return qseries.cross_validate(args.nmax + 1)
    if cmd == "transforms":
        return _transforms(args, mapper)
    if cmd == "limit":
        return asymptotics.appell_limit_scan(args.z, args.delta, args.steps, args.x0)
    if cmd == "tauberian":
        return asymptotics.tauberian_scan(args.a, args.c, args.eps, args.delta, args.ray, args.trunc)
    if cmd == "asym":
        return asymptotics.asym_sweep(args.a, args.c, args.n)
    if cmd == "scan":
        return asymptotics.inequality_scan(args.kind, args.a, args.c, args.nmax, mapper=mapper)
    raise UsageError(f"unknown command {cmd}")


def _transforms(args, mapper) -> ScanReport:
    whiches = ("theta", "mu", "h", "appell") if args.which == "all" else (args.which,)
    levels = (args.level,) if args.level else (1, 2, 3)
    ctx = modular.EvalContext(tol=min(1e-13, args.tol / 100))
    out = ScanReport("transforms", rule="lt")
    for which in whiches:
        for level in levels if which == "appell" else (1,):
            part = modular.residual_scan(which, level, args.tol, ctx, mapper)
            name = part.name.removeprefix("transform_")
            for p in part.points:
                out.add({"identity": name, **p.inputs}, p.measured, p.reference)
    return out


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        validate_args(args)
    except UsageError as exc:
        print(f"overrank: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        with _mapper(args.threads) as mapper:
            result = run(args, mapper)
    except OverrankError as exc:
        print(f"overrank: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_ENGINE
    result.params = {**result.params, "invocation": invocation(args)}
    text = emit(result, args.format)
    try:
        if args.out:
            with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
                fh.write(text)
        else:
            sys.stdout.write(text)
    except OSError as exc:
        print(f"overrank: cannot write output: {exc}", file=sys.stderr)
        return EXIT_IO
    if isinstance(result, ScanReport):
        if result.notes and args.format == "csv":
            for note in result.notes:
                print(note, file=sys.stderr)
        return EXIT_OK if result.passed else EXIT_FAIL
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
