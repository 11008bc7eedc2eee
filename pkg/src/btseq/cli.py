"""Command line front end: compute sequences, verify identities, benchmark.

Exit codes: 0 success (and all checks passed), 1 usage error, 2 verification
failure, 3 internal integrity error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from .bench import ALGORITHMS, bench_suite, crossover_summary
from .checks import full_verification
from .fastfixed import fast_secant_numbers, fast_tangent_numbers
from .intops import IntegrityError
from .recurrences import (
    akiyama_tanigawa_bernoulli,
    atkinson_tangent_secant,
    bernoulli_from_tangent,
    secant_numbers,
    tangent_numbers,
)
from .series import bernoulli_via_series

_SEQUENCE_ALGORITHMS = {
    "tangent": ("recurrence", "fast", "atkinson"),
    "secant": ("recurrence", "fast", "atkinson"),
    "bernoulli": ("recurrence", "fast", "atkinson", "akiyama", "series"),
}


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse would exit 2; the contract is 1
        raise _UsageError(message)


def build_parser() -> _Parser:
    parser = _Parser(
        prog="btseq",
        description="Exact Bernoulli, tangent, and secant numbers from "
        "independent cross-checked engines.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--format", choices=("plain", "json"), default="plain")
        p.add_argument(
            "--output", metavar="PATH", help="write to this file instead of stdout"
        )

    helps = {
        "tangent": "print the tangent numbers T_1..T_n",
        "secant": "print the secant numbers S_0..S_n",
        "bernoulli": "print the Bernoulli numbers B_0..B_n",
    }
    for name, text in helps.items():
        p = sub.add_parser(name, help=text)
        p.add_argument("-n", type=int, required=True, help="largest index")
        p.add_argument(
            "--algorithm",
            choices=_SEQUENCE_ALGORITHMS[name] + ("all",),
            default="recurrence",
            help="engine to use; 'all' runs every engine and insists they agree",
        )
        add_common(p)

    p = sub.add_parser("verify", help="run every consistency and identity check")
    p.add_argument("-n", type=int, required=True, help="size the checks run at")
    p.add_argument(
        "--precision",
        type=int,
        help="also contrast the fixed-precision recurrences at this many bits",
    )
    add_common(p)

    p = sub.add_parser("bench", help="time the engines and report op counts")
    p.add_argument(
        "-n", type=int, nargs="+", required=True, help="one or more sizes (each >= 2)"
    )
    p.add_argument(
        "--algorithm", choices=tuple(ALGORITHMS) + ("all",), default="all"
    )
    add_common(p)
    return parser


def _tangent_values(n: int, algorithm: str) -> list[int]:
    if algorithm == "fast":
        return fast_tangent_numbers(n)
    if algorithm == "atkinson":
        return atkinson_tangent_secant(n)[0]
    return tangent_numbers(n)[0]


def _secant_values(n: int, algorithm: str) -> list[int]:
    if algorithm == "fast":
        return fast_secant_numbers(n)
    if algorithm == "atkinson":
        return atkinson_tangent_secant(max(n, 1))[1][: n + 1]
    return secant_numbers(n)[0]


def _bernoulli_values(n: int, algorithm: str) -> list[Fraction]:
    if algorithm == "akiyama":
        return akiyama_tanigawa_bernoulli(n)
    if algorithm == "series":
        return bernoulli_via_series(n)
    tangent = _tangent_values(max(1, n // 2), algorithm)
    values = bernoulli_from_tangent(tangent)[: n + 1]
    while len(values) < n + 1:  # odd n: top entry is an odd-index zero
        values.append(Fraction(0))
    return values


_SEQUENCE_PRODUCERS = {
    "tangent": (_tangent_values, 1),
    "secant": (_secant_values, 0),
    "bernoulli": (_bernoulli_values, 0),
}


def _json_sequence(kind: str, n: int, first_index: int, values) -> str:
    payload = {
        "kind": kind,
        "n": n,
        "first_index": first_index,
        "values": [str(v) for v in values],
    }
    return json.dumps(payload, indent=2) + "\n"


def _emit_sequence(args) -> tuple[int, str]:
    produce, first_index = _SEQUENCE_PRODUCERS[args.command]
    if args.algorithm == "all":
        names = _SEQUENCE_ALGORITHMS[args.command]
        results = {name: produce(args.n, name) for name in names}
        baseline_name = names[0]
        baseline = results[baseline_name]
        for name, values in results.items():
            if values != baseline:
                return 2, f"engines disagree: {name} departs from {baseline_name}\n"
        values = baseline
    else:
        values = produce(args.n, args.algorithm)
    if args.format == "json":
        return 0, _json_sequence(args.command, args.n, first_index, values)
    lines = "".join(
        f"{i} {v}\n" for i, v in enumerate(values, start=first_index)
    )
    return 0, lines


def _emit_verify(args) -> tuple[int, str]:
    report = full_verification(args.n, args.precision)
    code = 0 if report.all_pass else 2
    if args.format == "json":
        payload = {
            "kind": "verify",
            "n": report.n,
            "all_pass": report.all_pass,
            "checks": [
                {"name": c.name, "passed": c.passed, "witness": c.witness}
                for c in report.checks
            ],
        }
        return code, json.dumps(payload, indent=2) + "\n"
    lines = []
    for check in report.checks:
        status = "PASS" if check.passed else "FAIL"
        suffix = f"  [{check.witness}]" if check.witness else ""
        lines.append(f"{status} {check.name}{suffix}")
    passed = sum(1 for c in report.checks if c.passed)
    lines.append(f"{passed}/{len(report.checks)} checks passed")
    return code, "\n".join(lines) + "\n"


def _emit_bench(args) -> tuple[int, str]:
    algorithms = None if args.algorithm == "all" else [args.algorithm]
    records = bench_suite(args.n, algorithms)
    if args.format == "json":
        payload = {
            "kind": "bench",
            "records": [
                {
                    "algorithm": r.algorithm,
                    "n": r.n,
                    "wall_time": r.wall_time,
                    "additions": r.counters.additions if r.counters else None,
                    "multiplications": r.counters.multiplications
                    if r.counters
                    else None,
                    "loop_trips": r.counters.loop_trips if r.counters else None,
                    "peak_value_bits": r.peak_value_bits,
                }
                for r in records
            ],
        }
        if args.algorithm == "all":
            payload["summary"] = crossover_summary(records)
        return 0, json.dumps(payload, indent=2) + "\n"
    header = (
        f"{'algorithm':<12} {'n':>6} {'seconds':>12} {'additions':>12} "
        f"{'mults':>12} {'loop_trips':>12} {'peak_bits':>10}"
    )
    lines = [header]
    for r in records:
        c = r.counters
        adds = str(c.additions) if c else "-"
        mults = str(c.multiplications) if c else "-"
        trips = str(c.loop_trips) if c else "-"
        lines.append(
            f"{r.algorithm:<12} {r.n:>6} {r.wall_time:>12.6f} {adds:>12} "
            f"{mults:>12} {trips:>12} {r.peak_value_bits:>10}"
        )
    if args.algorithm == "all":
        lines.append(crossover_summary(records))
    return 0, "\n".join(lines) + "\n"


def _dispatch(args) -> tuple[int, str]:
    if args.command in _SEQUENCE_PRODUCERS:
        if args.n < 1:
            raise _UsageError("-n must be >= 1")
        return _emit_sequence(args)
    if args.command == "verify":
        if args.n < 1:
            raise _UsageError("-n must be >= 1")
        return _emit_verify(args)
    return _emit_bench(args)


def run_cli(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1
    except SystemExit as exc:  # --help paths
        return int(exc.code or 0)
    try:
        code, text = _dispatch(args)
    except (_UsageError, ValueError) as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1
    except IntegrityError as exc:
        print(f"integrity error: {exc}", file=sys.stderr)
        return 3
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)
    return code


def main() -> None:
    sys.exit(run_cli())
