"""Command line surface: verify | partition | classnum | bench.

Data rows go to stdout (CSV by default, JSON array or NDJSON on request);
diagnostics and the summary line go to stderr. Output bytes for fixed
flags are deterministic and independent of --jobs.

Exit codes: 0 success, 1 identity failure or output mismatch, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
import time
from typing import IO, Sequence

from . import __version__, _backend, classnum, residues, theorems
from .modular import PRIME_LIMIT, OddPrime, primes_in_range
from .residues import ResiduePartition
from .theorems import Identity, IdentityReport

VERIFY_COLUMNS = [
    "p", "mod8",
    "count_q_l", "count_q_u", "count_n_l", "count_n_u",
    "sum_q_l", "sum_q_u", "sum_n_l", "sum_n_u",
    "n",
    "lemma_ok", "theorem_ok", "eq1_ok", "mod4_1_ok",
]
CLASSNUM_COLUMNS = ["p", "mod8", "count_q_l", "count_n_l", "count_diff", "h", "class_ok"]
BENCH_COLUMNS = ["backend", "algo", "primes", "elapsed_s", "primes_per_s"]

_VERDICT_COLUMNS = {
    Identity.LEMMA: "lemma_ok",
    Identity.THEOREM: "theorem_ok",
    Identity.EQ1: "eq1_ok",
    Identity.MOD4_1: "mod4_1_ok",
}

BENCH_ALGOS = ("squares", "symbol")


class UsageError(Exception):
    pass


def _verify_row(part: ResiduePartition, reports: list[IdentityReport]) -> dict:
    verdicts = {r.identity: r.holds for r in reports}
    row = {
        "p": part.p.value,
        "mod8": part.p.value % 8,
        "count_q_l": part.count_q_l,
        "count_q_u": part.count_q_u,
        "count_n_l": part.count_n_l,
        "count_n_u": part.count_n_u,
        "sum_q_l": part.sum_q_l,
        "sum_q_u": part.sum_q_u,
        "sum_n_l": part.sum_n_l,
        "sum_n_u": part.sum_n_u,
        "n": part.n_below_half,
    }
    for ident, col in _VERDICT_COLUMNS.items():
        row[col] = verdicts.get(ident)
    return row


def _csv_cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "1" if value else "0"
    if isinstance(value, float):
        return f"{value:.6f}"
    return str(value)


def _emit(rows: list[dict], columns: list[str], fmt: str, ndjson: bool, out: IO[str]) -> None:
    if fmt == "csv":
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(columns)
        for row in rows:
            writer.writerow([_csv_cell(row[c]) for c in columns])
    elif ndjson:
        for row in rows:
            json.dump({c: row[c] for c in columns}, out)
            out.write("\n")
    else:
        json.dump([{c: row[c] for c in columns} for row in rows], out, indent=2)
        out.write("\n")


def _resolve_format(args: argparse.Namespace) -> tuple[str, bool]:
    fmt = args.format
    if args.ndjson:
        if fmt == "csv":
            raise UsageError("--ndjson applies to JSON output only")
        fmt = "json"
    return fmt or "csv", args.ndjson


def _check_range(lo: int, hi: int) -> None:
    if lo < 3:
        raise UsageError(f"--from must be at least 3, got {lo}")
    if hi < lo:
        raise UsageError(f"empty range: --from {lo} --to {hi}")
    if hi >= PRIME_LIMIT:
        raise UsageError(f"--to {hi} exceeds the 2**31 modulus bound")


def _note(args: argparse.Namespace, message: str) -> None:
    if not args.quiet:
        print(message, file=sys.stderr)


def cmd_verify(args: argparse.Namespace) -> int:
    fmt, ndjson = _resolve_format(args)
    _check_range(args.lo, args.hi)
    if args.jobs < 1:
        raise UsageError(f"--jobs must be at least 1, got {args.jobs}")
    try:
        idents = theorems.normalize_selection(args.identities)
    except ValueError as exc:
        raise UsageError(str(exc)) from None

    rows: list[dict] = []

    def sink(part: ResiduePartition, reports: list[IdentityReport]) -> None:
        rows.append(_verify_row(part, reports))

    summary = theorems.verify_range(args.lo, args.hi, identities=idents, jobs=args.jobs, sink=sink)
    _emit(rows, VERIFY_COLUMNS, fmt, ndjson, sys.stdout)
    _note(
        args,
        f"verify: {summary.primes_checked} primes in [{args.lo}, {args.hi}], "
        f"{len(summary.failures)} failing identities, {summary.elapsed:.3f}s "
        f"({summary.half_convention})",
    )
    for failure in summary.failures:
        print(
            f"FAIL p={failure.p.value} {failure.identity.value}: "
            f"lhs={failure.lhs} rhs={failure.rhs}",
            file=sys.stderr,
        )
    return 1 if summary.failures else 0


def cmd_partition(args: argparse.Namespace) -> int:
    fmt, ndjson = _resolve_format(args)
    try:
        p = OddPrime.ensure(args.p)
    except (ValueError, TypeError) as exc:
        raise UsageError(f"{args.p} is not a usable modulus: {exc}") from None
    part = residues.partition_by_squares(p)
    reports = theorems.run_checks(part)
    _emit([_verify_row(part, reports)], VERIFY_COLUMNS, fmt, ndjson, sys.stdout)
    failures = [r for r in reports if not r.holds]
    for failure in failures:
        print(
            f"FAIL p={failure.p.value} {failure.identity.value}: "
            f"lhs={failure.lhs} rhs={failure.rhs}",
            file=sys.stderr,
        )
    return 1 if failures else 0


def cmd_classnum(args: argparse.Namespace) -> int:
    fmt, ndjson = _resolve_format(args)
    _check_range(args.lo, args.hi)
    rows = []
    failures = 0
    t0 = time.perf_counter()
    for p in primes_in_range(max(args.lo, 5), args.hi):
        if p % 4 != 3:
            continue
        part = residues.partition_by_squares(p)
        h = classnum.class_number(part.p)
        report = classnum.class_cross_check(part, h=h)
        failures += not report.holds
        rows.append(
            {
                "p": p,
                "mod8": p % 8,
                "count_q_l": part.count_q_l,
                "count_n_l": part.count_n_l,
                "count_diff": report.lhs,
                "h": h,
                "class_ok": report.holds,
            }
        )
    _emit(rows, CLASSNUM_COLUMNS, fmt, ndjson, sys.stdout)
    _note(
        args,
        f"classnum: {len(rows)} primes = 3 (mod 4) in [{args.lo}, {args.hi}], "
        f"{failures} cross-check failures, {time.perf_counter() - t0:.3f}s",
    )
    return 1 if failures else 0


def cmd_bench(args: argparse.Namespace) -> int:
    fmt, ndjson = _resolve_format(args)
    _check_range(args.lo, args.hi)
    algos = args.algos.split(",") if args.algos else list(BENCH_ALGOS)
    for algo in algos:
        if algo not in BENCH_ALGOS:
            raise UsageError(f"unknown algorithm {algo!r}; expected one of {BENCH_ALGOS}")

    primes = [p for p in primes_in_range(max(args.lo, 3), args.hi)]
    backends = _backend.available_backends()
    rows = []
    baseline: list[tuple[int, ...]] | None = None
    baseline_label = ""
    mismatches = 0
    for backend in backends:
        kernel = _backend.get(backend)
        for algo in algos:
            fn = kernel.partition_squares if algo == "squares" else kernel.partition_symbol
            t0 = time.perf_counter()
            outputs = [fn(p) for p in primes]
            elapsed = time.perf_counter() - t0
            label = f"{backend}/{algo}"
            if baseline is None:
                baseline, baseline_label = outputs, label
            elif outputs != baseline:
                mismatches += 1
                bad = next(p for p, a, b in zip(primes, baseline, outputs) if a != b)
                print(f"MISMATCH {label} vs {baseline_label} at p={bad}", file=sys.stderr)
            rows.append(
                {
                    "backend": backend,
                    "algo": algo,
                    "primes": len(primes),
                    "elapsed_s": elapsed,
                    "primes_per_s": len(primes) / elapsed if elapsed > 0 else float("inf"),
                }
            )
    _emit(rows, BENCH_COLUMNS, fmt, ndjson, sys.stdout)
    _note(
        args,
        f"bench: {len(primes)} primes in [{args.lo}, {args.hi}], "
        f"{len(rows)} runs ({', '.join(backends)}), "
        + ("outputs identical" if not mismatches else f"{mismatches} MISMATCHED runs"),
    )
    return 1 if mismatches else 0


def _add_common_flags(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--format", choices=("csv", "json"), default=None,
                     help="output format for data rows (default: csv)")
    sub.add_argument("--ndjson", action="store_true",
                     help="emit JSON rows newline-delimited instead of as an array")
    sub.add_argument("--quiet", action="store_true",
                     help="suppress the summary line on stderr")


def _add_range_flags(sub: argparse.ArgumentParser, lo: int, hi: int) -> None:
    sub.add_argument("--from", dest="lo", type=int, default=lo, metavar="LO",
                     help=f"range start, inclusive (default {lo})")
    sub.add_argument("--to", dest="hi", type=int, default=hi, metavar="HI",
                     help=f"range end, inclusive (default {hi})")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qrsums",
        description="Exact verification of quadratic residue sum identities over Z_p.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    verify = sub.add_parser("verify", help="check the sum identities over a prime range")
    _add_range_flags(verify, 3, 100_000)
    verify.add_argument("--identities", default=None, metavar="LIST",
                        help="comma list from {lemma,theorem,eq1,mod4_1} (default: all)")
    verify.add_argument("--jobs", type=int, default=1,
                        help="worker processes (output order is unaffected)")
    _add_common_flags(verify)
    verify.set_defaults(func=cmd_verify)

    partition = sub.add_parser("partition", help="print one prime's full residue census")
    partition.add_argument("p", type=int, help="an odd prime below 2**31")
    _add_common_flags(partition)
    partition.set_defaults(func=cmd_partition)

    cls = sub.add_parser("classnum", help="class numbers h(-p) and the count cross-check")
    _add_range_flags(cls, 3, 1_000)
    _add_common_flags(cls)
    cls.set_defaults(func=cmd_classnum)

    bench = sub.add_parser("bench", help="time the partition algorithms on every backend")
    _add_range_flags(bench, 3, 10_000)
    bench.add_argument("--algos", default=None, metavar="LIST",
                       help="comma list from {squares,symbol} (default: both)")
    _add_common_flags(bench)
    bench.set_defaults(func=cmd_bench)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "verify":
        args.identities = args.identities.split(",") if args.identities not in (None, "all") else None
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
