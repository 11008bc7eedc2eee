"""Timing and operation-count harness for the competing engines."""

from __future__ import annotations

import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .fastfixed import fast_tangent_numbers
from .recurrences import (
    OpCounters,
    akiyama_tanigawa_bernoulli,
    atkinson_tangent_secant,
    tangent_numbers,
)
from .series import bernoulli_via_series


@dataclass(frozen=True)
class BenchRecord:
    """One benchmarked run: best wall time over the repeats plus op counts.

    counters is None for engines that are not built from counted loops.
    peak_value_bits is the bit length of the largest numerator or
    denominator among the produced values.
    """

    algorithm: str
    n: int
    wall_time: float
    counters: OpCounters | None
    peak_value_bits: int


def _peak_bits(values) -> int:
    peak = 0
    for value in values:
        if isinstance(value, Fraction):
            peak = max(
                peak, value.numerator.bit_length(), value.denominator.bit_length()
            )
        else:
            peak = max(peak, abs(value).bit_length())
    return peak


def _run_recurrence(n: int):
    return tangent_numbers(n)


def _run_fast(n: int):
    return fast_tangent_numbers(n), None


def _run_atkinson(n: int):
    tangent, secant, ops = atkinson_tangent_secant(n)
    return tangent + secant, ops


def _run_akiyama(n: int):
    return akiyama_tanigawa_bernoulli(2 * n), None


def _run_series(n: int):
    return bernoulli_via_series(2 * n), None


# akiyama and series run out to index 2n so that every record at a given n
# carries the information content of T_1..T_n and stays comparable
ALGORITHMS = {
    "recurrence": _run_recurrence,
    "fast": _run_fast,
    "atkinson": _run_atkinson,
    "akiyama": _run_akiyama,
    "series": _run_series,
}


def bench_suite(
    n_values: Iterable[int],
    algorithms: Sequence[str] | None = None,
    repeats: int = 3,
) -> list[BenchRecord]:
    """Best-of-`repeats` wall time and counters for each algorithm and size."""
    names = list(ALGORITHMS) if algorithms is None else list(algorithms)
    for name in names:
        if name not in ALGORITHMS:
            raise ValueError(f"unknown algorithm {name!r}")
    records = []
    for n in n_values:
        if n < 2:
            raise ValueError("benchmark sizes must be >= 2")
        for name in names:
            run = ALGORITHMS[name]
            best = None
            values: list = []
            counters = None
            for _ in range(max(1, repeats)):
                start = time.perf_counter()
                values, counters = run(n)
                elapsed = time.perf_counter() - start
                best = elapsed if best is None else min(best, elapsed)
            records.append(BenchRecord(name, n, best, counters, _peak_bits(values)))
    return records


def crossover_summary(records: Sequence[BenchRecord]) -> str:
    """Smallest benchmarked n where the packed-division engine beat the
    in-place recurrence; an observation about this machine, not a contract."""
    times: dict[int, dict[str, float]] = {}
    for record in records:
        times.setdefault(record.n, {})[record.algorithm] = record.wall_time
    wins = sorted(
        n
        for n, by_name in times.items()
        if "fast" in by_name
        and "recurrence" in by_name
        and by_name["fast"] < by_name["recurrence"]
    )
    if wins:
        return f"fast engine first beats the in-place recurrence at n = {wins[0]}"
    return "no crossover within the benchmarked sizes"
