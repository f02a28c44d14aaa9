"""Command-line interface: partitions, table, verify and bench subcommands.

Exit codes are a stable contract: 0 success, 1 invalid input, 2 internal
verification failure.  Configuration precedence is flags, then KOSTKA_*
environment variables, then defaults.
"""

from __future__ import annotations

import argparse
import json
import os
import statistics
import sys
import time
from pathlib import Path

from .errors import InputError, VerificationError
from .frobenius import frobenius_table
from .monomial import (
    characters_from_monomials,
    inverse_kostka_from_monomials,
    kostka_from_monomials,
)
from .partitions import (
    DEFAULT_MAX_N,
    build_context,
    format_partition,
    partitions_of,
)
from .tables import (
    IntegerTable,
    from_json_text,
    pretty,
    to_csv,
    to_json_text,
)
from .triangular import bracket, triangular_solve
from .verification import MONOMIAL_METHOD_CAP, run_checks

EXIT_OK = 0
EXIT_INVALID_INPUT = 1
EXIT_VERIFICATION_FAILURE = 2

TABLE_KINDS = ("frobenius", "kostka", "inverse-kostka", "characters")


def _max_n(args) -> int:
    env = os.environ.get("KOSTKA_MAX_N")
    if env is not None:
        try:
            return int(env)
        except ValueError:
            raise InputError(f"KOSTKA_MAX_N is not an integer: {env!r}") from None
    return DEFAULT_MAX_N


def _cache_dir(args) -> Path | None:
    if args.cache_dir:
        return Path(args.cache_dir)
    env = os.environ.get("KOSTKA_CACHE_DIR")
    return Path(env) if env else None


def _validate_cached(table: IntegerTable, kind: str, n: int) -> None:
    """Re-check the invariants a cached table must satisfy before use."""
    ctx = build_context(n, cap=None)
    if table.kind != kind or table.n != n:
        raise VerificationError("cached table has the wrong kind or size")
    if table.row_labels != ctx.partitions or table.col_labels != ctx.partitions:
        raise VerificationError("cached table labels are not in canonical order")
    if kind == "frobenius":
        if table.values[0] != (1,) * ctx.k:
            raise VerificationError("cached frobenius table: top row is not all ones")
        if any(v < 0 for row in table.values for v in row):
            raise VerificationError("cached frobenius table has a negative entry")
        if table.values[-1][-1] != ctx.group_order:
            raise VerificationError("cached frobenius table: bad identity-class entry")
    elif kind in ("kostka", "inverse-kostka"):
        for i in range(ctx.k):
            if table.values[i][i] != 1:
                raise VerificationError(f"cached {kind}: diagonal is not all ones")
            if any(table.values[i][j] for j in range(i + 1, ctx.k)):
                raise VerificationError(f"cached {kind}: not lower triangular")
        if kind == "kostka" and any(v < 0 for row in table.values for v in row):
            raise VerificationError("cached kostka table has a negative entry")
    elif kind == "characters":
        for i in range(ctx.k):
            for j in range(i, ctx.k):
                expected = 1 if i == j else 0
                if bracket(table.values[i], table.values[j], ctx) != expected:
                    raise VerificationError("cached character table not orthonormal")


def _compute_table(kind: str, n: int, method: str) -> IntegerTable:
    ctx = build_context(n, cap=None)
    if kind == "frobenius":
        if method == "monomial":
            raise InputError("the frobenius table has no monomial method")
        return frobenius_table(ctx)
    if method == "monomial":
        if n > MONOMIAL_METHOD_CAP:
            raise InputError(
                f"monomial method capped at n={MONOMIAL_METHOD_CAP}, got n={n}"
            )
        if kind == "kostka":
            return kostka_from_monomials(ctx)
        if kind == "inverse-kostka":
            return inverse_kostka_from_monomials(ctx)
        return characters_from_monomials(ctx, frobenius_table(ctx))
    result = triangular_solve(frobenius_table(ctx), ctx)
    return {
        "kostka": result.kostka,
        "inverse-kostka": result.inverse_kostka,
        "characters": result.characters,
    }[kind]


def _get_table(kind: str, n: int, method: str, cache: Path | None) -> IntegerTable:
    if cache is None:
        return _compute_table(kind, n, method)
    effective = "none" if kind == "frobenius" else method
    path = cache / f"{kind}-n{n}-{effective}.json"
    if path.exists():
        table = from_json_text(path.read_text())
        _validate_cached(table, kind, n)
        return table
    table = _compute_table(kind, n, method)
    cache.mkdir(parents=True, exist_ok=True)
    path.write_text(to_json_text(table))
    return table


def _render_table(table: IntegerTable, fmt: str, n: int) -> str:
    if fmt == "json":
        return to_json_text(table)
    if fmt == "csv":
        return to_csv(table)
    sizes = None
    if table.kind in ("frobenius", "characters"):
        sizes = build_context(n, cap=None).class_sizes
    return pretty(table, class_sizes=sizes)


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text if text.endswith("\n") else text + "\n")
    else:
        print(text.rstrip("\n"))


def cmd_partitions(args) -> int:
    parts = partitions_of(args.n, cap=_max_n(args))
    if args.format == "json":
        text = json.dumps([list(p) for p in parts])
    else:
        text = "\n".join(format_partition(p) for p in parts)
    _emit(text, getattr(args, "out", None))
    return EXIT_OK


def cmd_table(args) -> int:
    cap = _max_n(args)
    if args.n < 1 or args.n > cap:
        raise InputError(f"n must be in 1..{cap}, got {args.n}")
    table = _get_table(args.kind, args.n, args.method, _cache_dir(args))
    _emit(_render_table(table, args.format, args.n), args.out)
    return EXIT_OK


def cmd_verify(args) -> int:
    cap = _max_n(args)
    if args.n < 1 or args.n > cap:
        raise InputError(f"n must be in 1..{cap}, got {args.n}")
    report = run_checks(args.n, deep=args.deep)
    text = report.to_json() if args.format == "json" else report.to_text()
    _emit(text, getattr(args, "out", None))
    return EXIT_OK if report.all_passed else EXIT_VERIFICATION_FAILURE


def _bench_once(fn) -> int:
    start = time.perf_counter_ns()
    fn()
    return time.perf_counter_ns() - start


def cmd_bench(args) -> int:
    n = args.n
    if n < 1 or n > MONOMIAL_METHOD_CAP:
        raise InputError(f"bench requires 1 <= n <= {MONOMIAL_METHOD_CAP}, got {n}")
    if args.reps < 1:
        raise InputError(f"repetitions must be >= 1, got {args.reps}")
    ctx = build_context(n)

    def triangular_pipeline():
        triangular_solve(frobenius_table(ctx), ctx)

    def monomial_pipeline():
        characters_from_monomials(ctx, frobenius_table(ctx))

    tri = [_bench_once(triangular_pipeline) for _ in range(args.reps)]
    mono = [_bench_once(monomial_pipeline) for _ in range(args.reps)]
    report = {
        "n": n,
        "repetitions": args.reps,
        "triangular_nanos": int(statistics.median(tri)),
        "monomial_nanos": int(statistics.median(mono)),
    }
    if args.format == "pretty":
        text = (
            f"n={n} reps={args.reps}\n"
            f"triangular median: {report['triangular_nanos'] / 1e6:.3f} ms\n"
            f"monomial   median: {report['monomial_nanos'] / 1e6:.3f} ms"
        )
    else:
        text = json.dumps(report, indent=2)
    _emit(text, getattr(args, "out", None))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kostka",
        description="Exact Kostka matrices and symmetric-group character tables",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("partitions", help="list the partitions of n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--format", choices=("pretty", "csv", "json"), default="pretty")
    p.add_argument("--out")
    p.set_defaults(func=cmd_partitions)

    t = sub.add_parser("table", help="compute one of the four tables")
    t.add_argument("kind", choices=TABLE_KINDS)
    t.add_argument("--n", type=int, required=True)
    t.add_argument("--method", choices=("triangular", "monomial"), default="triangular")
    t.add_argument("--format", choices=("pretty", "csv", "json"), default="pretty")
    t.add_argument("--out")
    t.add_argument("--cache-dir")
    t.set_defaults(func=cmd_table)

    v = sub.add_parser("verify", help="run the identity cross-checks")
    v.add_argument("--n", type=int, required=True)
    v.add_argument("--format", choices=("pretty", "json"), default="pretty")
    v.add_argument("--deep", action="store_true", help="raw-polynomial check up to n=5")
    v.add_argument("--out")
    v.set_defaults(func=cmd_verify)

    b = sub.add_parser("bench", help="time the two methods against each other")
    b.add_argument("--n", type=int, required=True)
    b.add_argument("--reps", type=int, default=5)
    b.add_argument("--format", choices=("pretty", "json"), default="json")
    b.add_argument("--out")
    b.set_defaults(func=cmd_bench)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID_INPUT
    except VerificationError as exc:
        print(f"verification failure: {exc}", file=sys.stderr)
        return EXIT_VERIFICATION_FAILURE


if __name__ == "__main__":
    sys.exit(main())
