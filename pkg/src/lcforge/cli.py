"""Command-line interface.

Subcommands: lc, kerr, profile (single-sequence analysis), count (closed
forms), census, verify, refute (distribution work).  Every subcommand
renders as an aligned table, JSON, or CSV via --format.

Exit codes: 0 on success (for verify: every row matches), 1 when verify
finds a formula/census mismatch, 2 on invalid input or an over-budget
search.
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

from . import census as census_mod
from . import core, kerror
from .census import (
    CensusQuery,
    Exhaustive,
    Sampled,
    SequenceClass,
    census_distribution,
    refutation_report,
    render_json,
    verify_formulas,
)
from .errors import InvalidParams, LcforgeError

_FORMATS = ("table", "json", "csv")
_CLASSES = tuple(c.value for c in SequenceClass)


def _add_format(parser):
    parser.add_argument(
        "--format", choices=_FORMATS, default="table", help="output format"
    )


def _add_input(parser):
    parser.add_argument(
        "--n", type=int, required=True, metavar="N",
        help="period exponent: the period is 2^N",
    )
    group = parser.add_mutually_exclusive_group(required=True)
    group.add_argument(
        "--bits", metavar="STR", help="one period as a 0/1 string, position 0 first"
    )
    group.add_argument(
        "--hex", dest="hex_digits", metavar="STR",
        help="one period as hex digits, most significant bit first",
    )
    group.add_argument(
        "--file", metavar="PATH",
        help="file holding the 0/1 string (whitespace ignored)",
    )


def _add_jobs(parser):
    parser.add_argument(
        "--jobs", type=int, default=None, metavar="J",
        help="worker processes (default: $LCFORGE_JOBS, else all cores)",
    )


def _add_census_params(parser):
    parser.add_argument("--n", type=int, required=True, metavar="N")
    parser.add_argument("--k", type=int, required=True, metavar="K")
    parser.add_argument(
        "--class", dest="seq_class", choices=_CLASSES, default="all",
        help="sequence class: all, full (odd weight), or less (even weight)",
    )


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lcforge",
        description="Linear complexity and k-error linear complexity of"
        " 2^n-periodic binary sequences.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("lc", help="linear complexity of one sequence")
    _add_input(p)
    _add_format(p)

    p = sub.add_parser("kerr", help="exact k-error linear complexity with witness")
    _add_input(p)
    p.add_argument("--k", type=int, required=True, metavar="K")
    _add_format(p)

    p = sub.add_parser("profile", help="k-error complexity profile for k = 0..kmax")
    _add_input(p)
    p.add_argument("--kmax", type=int, required=True, metavar="K")
    _add_format(p)

    p = sub.add_parser("count", help="closed-form count of sequences at one L")
    _add_census_params(p)
    p.add_argument("--L", type=int, required=True, metavar="L")
    _add_format(p)

    p = sub.add_parser("census", help="distribution of k-error complexity")
    _add_census_params(p)
    p.add_argument(
        "--mode", choices=("exhaustive", "sampled"), default="exhaustive"
    )
    p.add_argument(
        "--samples", type=int, default=4096, metavar="COUNT",
        help="draws for --mode sampled (default 4096)",
    )
    p.add_argument(
        "--seed", type=int, default=0, metavar="SEED",
        help="stream seed for --mode sampled (default 0)",
    )
    _add_jobs(p)
    _add_format(p)

    p = sub.add_parser("verify", help="census vs closed form for every L")
    _add_census_params(p)
    _add_jobs(p)
    _add_format(p)

    p = sub.add_parser(
        "refute",
        help="period-16 3-error census vs closed form vs the published table",
    )
    _add_jobs(p)
    _add_format(p)

    return parser


def _load_sequence(args) -> core.PeriodicSequence:
    if args.bits is not None:
        return core.parse_binary(args.bits, args.n)
    if args.hex_digits is not None:
        return core.parse_hex(args.hex_digits, args.n)
    text = "".join(Path(args.file).read_text().split())
    return core.parse_binary(text, args.n)


def _resolve_jobs(args) -> int:
    if args.jobs is not None:
        if args.jobs < 1:
            raise InvalidParams(f"--jobs must be at least 1, got {args.jobs}")
        return args.jobs
    env = os.environ.get("LCFORGE_JOBS")
    if env:
        try:
            jobs = int(env)
        except ValueError:
            raise InvalidParams(f"LCFORGE_JOBS must be an integer, got {env!r}")
        if jobs < 1:
            raise InvalidParams(f"LCFORGE_JOBS must be at least 1, got {jobs}")
        return jobs
    return os.cpu_count() or 1


def _emit_pairs(pairs, fmt: str) -> None:
    """Render a small key/value result: aligned lines, JSON, or one CSV row."""
    if fmt == "json":
        print(render_json(dict(pairs)))
    elif fmt == "csv":
        print(",".join(str(key) for key, _ in pairs))
        print(",".join(_csv_cell(value) for _, value in pairs))
    else:
        for key, value in pairs:
            print(f"{key} = {_table_cell(value)}")


def _csv_cell(value) -> str:
    if isinstance(value, (list, tuple)):
        return " ".join(str(v) for v in value)
    return str(value)


def _table_cell(value) -> str:
    if isinstance(value, (list, tuple)):
        return "[" + ", ".join(str(v) for v in value) + "]"
    return str(value)


def _class_label(s: core.PeriodicSequence) -> str:
    return "FullLC" if s.weight() & 1 else "LessLC"


def _cmd_lc(args) -> int:
    s = _load_sequence(args)
    pairs = [
        ("n", args.n),
        ("L", core.games_chan_lc(s)),
        ("weight", s.weight()),
        ("class", _class_label(s)),
    ]
    _emit_pairs(pairs, args.format)
    return 0


def _cmd_kerr(args) -> int:
    s = _load_sequence(args)
    result = kerror.k_error_lc(s, args.k)
    pairs = [
        ("n", args.n),
        ("k", args.k),
        ("L", core.games_chan_lc(s)),
        ("Lk", result.value),
        ("witness", list(result.witness.positions)),
    ]
    _emit_pairs(pairs, args.format)
    return 0


def _cmd_profile(args) -> int:
    s = _load_sequence(args)
    profile = kerror.k_error_profile(s, args.kmax)
    if args.format == "json":
        payload = {
            "n": args.n,
            "kmax": args.kmax,
            "rows": [{"k": k, "Lk": value} for k, value in profile],
        }
        print(render_json(payload))
    elif args.format == "csv":
        print("k,Lk")
        for k, value in profile:
            print(f"{k},{value}")
    else:
        width = len(str(1 << args.n))
        print(f"{'k':>4}  {'L_k':>{width}}")
        for k, value in profile:
            print(f"{k:>4}  {value:>{width}}")
    return 0


def _cmd_count(args) -> int:
    seq_class = SequenceClass(args.seq_class)
    counts = census_mod.formula_counts(args.n, args.k, seq_class)
    if not 0 <= args.L < len(counts):
        raise InvalidParams(f"--L must be in [0, {len(counts) - 1}], got {args.L}")
    count = counts[args.L]
    if args.format == "table":
        print(count)
    else:
        pairs = [
            ("n", args.n),
            ("L", args.L),
            ("k", args.k),
            ("class", seq_class.value),
            ("count", count),
        ]
        _emit_pairs(pairs, args.format)
    return 0


def _print_census_table(report) -> None:
    size = report.sample_size
    widths = [len(str(1 << report.n)) + 1, 12, 12, 9]
    header = (
        f"{'L':>{widths[0]}} {'census':>{widths[1]}}"
        f" {'formula':>{widths[2]}} {'verdict':<{widths[3]}}"
    )
    if size is not None:
        header += f" {'3s-interval':<22}"
    print(header.rstrip())
    for row in report.rows:
        formula = "-" if row.formula is None else str(row.formula)
        line = (
            f"{row.L:>{widths[0]}} {row.census:>{widths[1]}}"
            f" {formula:>{widths[2]}} {row.verdict:<{widths[3]}}"
        )
        if size is not None:
            lo, hi = report.interval(row)
            line += f" [{lo:.5f}, {hi:.5f}]"
        print(line.rstrip())
    totals_formula = report.formula_total
    print(
        f"total: census {report.census_total}"
        + ("" if totals_formula is None else f", formula {totals_formula}")
    )
    print(f"elapsed: {report.elapsed:.3f}s")


def _emit_census_report(report, fmt: str) -> None:
    if fmt == "json":
        print(report.to_json())
    elif fmt == "csv":
        print(report.to_csv(), end="")
    else:
        _print_census_table(report)


def _cmd_census(args) -> int:
    if args.mode == "sampled":
        mode = Sampled(args.samples, args.seed)
    else:
        mode = Exhaustive()
    query = CensusQuery(args.n, args.k, SequenceClass(args.seq_class), mode)
    report = census_distribution(query, _resolve_jobs(args))
    _emit_census_report(report, args.format)
    return 0


def _cmd_verify(args) -> int:
    report = verify_formulas(
        args.n, args.k, SequenceClass(args.seq_class), _resolve_jobs(args)
    )
    _emit_census_report(report, args.format)
    return 0 if report.all_match else 1


def _cmd_refute(args) -> int:
    report = refutation_report(_resolve_jobs(args))
    if args.format == "json":
        print(report.to_json())
    elif args.format == "csv":
        print(report.to_csv(), end="")
    else:
        print(f"{'L':>3} {'census':>8} {'theorem':>8} {'fixture':>8} verdict")
        for row in report.rows:
            print(
                f"{row.L:>3} {row.census:>8} {row.theorem:>8}"
                f" {row.fixture:>8} {row.verdict}"
            )
        print(
            f"total: census {report.census_total}, theorem {report.theorem_total},"
            f" fixture {report.fixture_total}"
        )
        print(f"fixture disagrees at L = {_table_cell(list(report.mismatched_L))}")
        print(f"elapsed: {report.elapsed:.3f}s")
    return 0


_COMMANDS = {
    "lc": _cmd_lc,
    "kerr": _cmd_kerr,
    "profile": _cmd_profile,
    "count": _cmd_count,
    "census": _cmd_census,
    "verify": _cmd_verify,
    "refute": _cmd_refute,
}


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except LcforgeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
