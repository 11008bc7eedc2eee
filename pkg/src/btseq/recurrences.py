"""Quadratic-time exact engines for tangent, secant, and Bernoulli numbers.

Two in-place engines run a three-term update over a single row buffer (one
for tangent numbers, one for secant numbers). The boustrophedon triangle of
Atkinson produces both integer families with additions only. The
Akiyama-Tanigawa triangle is the all-rational route to Bernoulli numbers,
and two fixed-precision recurrences demonstrate the numerically stable and
unstable ways of reaching the same values in floating point. Engines report
operation counters so their cost models can be checked against measurement.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional

from .softfloat import SoftFloat

TangentSeq = list[int]      # entry k-1 holds T_k, the k-th tangent number
SecantSeq = list[int]       # entry k holds S_k, the k-th secant number
BernoulliSeq = list[Fraction]  # entry m holds B_m


@dataclass
class OpCounters:
    """Per-invocation operation counts.

    additions and multiplications count big-integer operations;
    init_multiplications is the subset of multiplications spent filling the
    row before the main loop, so the main-loop total is the difference.
    loop_trips counts inner-loop iterations.
    """

    additions: int = 0
    multiplications: int = 0
    init_multiplications: int = 0
    loop_trips: int = 0


def tangent_numbers(
    n: int, trace: Optional[Callable[[int, int, int], None]] = None
) -> tuple[TangentSeq, OpCounters]:
    """Return ([T_1..T_n], counters) via the in-place three-term update.

    The row starts as T_k = (k-1)! and each outer pass k applies
    T_j <- (j-k) T_{j-1} + (j-k+2) T_j for j = k..n, sweeping one diagonal
    of the table of derivative-polynomial coefficients of tan. `trace`,
    when given, is called as trace(k, j, value) after every inner update
    (used to test the dataflow).
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    ops = OpCounters()
    row = [0] * (n + 1)
    row[1] = 1
    for k in range(2, n + 1):
        row[k] = (k - 1) * row[k - 1]
        ops.multiplications += 1
        ops.init_multiplications += 1
    for k in range(2, n + 1):
        for j in range(k, n + 1):
            row[j] = (j - k) * row[j - 1] + (j - k + 2) * row[j]
            ops.additions += 1
            ops.multiplications += 2
            ops.loop_trips += 1
            if trace is not None:
                trace(k, j, row[j])
    return row[1:], ops


def secant_numbers(n: int) -> tuple[SecantSeq, OpCounters]:
    """Return ([S_0..S_n], counters) via the in-place three-term update.

    The row starts as S_k = k * S_{k-1} and each outer pass k applies
    S_j <- (j-k) S_{j-1} + (j-k+1) S_j for j = k+1..n.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    ops = OpCounters()
    row = [0] * (n + 1)
    row[0] = 1
    for k in range(1, n + 1):
        row[k] = k * row[k - 1]
        ops.multiplications += 1
        ops.init_multiplications += 1
    for k in range(1, n + 1):
        for j in range(k + 1, n + 1):
            row[j] = (j - k) * row[j - 1] + (j - k + 1) * row[j]
            ops.additions += 1
            ops.multiplications += 2
            ops.loop_trips += 1
    return row, ops


def bernoulli_from_tangent(tangent: TangentSeq) -> BernoulliSeq:
    """Expand [T_1..T_n] into the full Bernoulli list [B_0..B_2n].

    B_{2k} = (-1)**(k-1) * k * T_k / (2**(2k-1) * (2**(2k) - 1)), with
    B_0 = 1, B_1 = -1/2, and every other odd entry zero.
    """
    n = len(tangent)
    values = [Fraction(0)] * (2 * n + 1)
    values[0] = Fraction(1)
    if n >= 1:
        values[1] = Fraction(-1, 2)
    for k, t in enumerate(tangent, start=1):
        num = k * t if k % 2 else -k * t
        den = (1 << (2 * k - 1)) * ((1 << (2 * k)) - 1)
        values[2 * k] = Fraction(num, den)
    return values


def atkinson_tangent_secant(n: int) -> tuple[TangentSeq, SecantSeq, OpCounters]:
    """Return ([T_1..T_n], [S_0..S_n], counters) using integer additions only.

    Builds 2n+1 rows of the boustrophedon triangle: each row is the running
    sum of its predecessor read in the opposite direction, and the row ends
    are alternately tangent and secant numbers.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    ops = OpCounters()
    tangent: TangentSeq = []
    secant: SecantSeq = [1]  # the seed row supplies S_0
    prev = [1]
    for m in range(1, 2 * n + 1):
        row = [0]
        for i in range(1, m + 1):
            row.append(row[i - 1] + prev[m - i])
            ops.additions += 1
            ops.loop_trips += 1
        prev = row
        if m % 2:
            tangent.append(row[m])
        else:
            secant.append(row[m])
    return tangent, secant, ops


def akiyama_tanigawa_bernoulli(n: int) -> BernoulliSeq:
    """Return [B_0..B_n] from the rational weighted-difference triangle.

    Row zero is 1, 1/2, 1/3, ...; each later row applies
    a[m] <- (m+1) * (a[m] - a[m+1]) and the leading entry of row i is B_i.
    The raw triangle yields +1/2 at index 1; that single entry is negated so
    every Bernoulli producer in this package shares the B_1 = -1/2
    convention. Exact rationals throughout: this triangle loses all accuracy
    in floating point.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    row = [Fraction(1, m + 1) for m in range(n + 1)]
    out = [row[0]]
    for i in range(1, n + 1):
        row = [(m + 1) * (row[m] - row[m + 1]) for m in range(n + 1 - i)]
        out.append(row[0])
    if n >= 1:
        out[1] = -out[1]
    return out


def bernoulli_float_unstable(n: int, precision: int) -> list[SoftFloat]:
    """Return [B_0..B_n] from the binomial-sum recurrence at fixed precision.

    Solves sum_{j<=k} C(k+1, j) B_j = 0 for B_k the classical way: odd
    entries past B_1 = -1/2 stay pinned at their exact zero value and only
    even indices are computed. Perturbations then travel along solutions of
    the homogeneous relation restricted to even indices, which shrink only
    like pi**(-2m) against (2m)!, while B_{2m}/(2m)! shrinks like
    (2*pi)**(-2m); the relative error of B_{2m} therefore grows like
    4**m * 2**(1-precision) and the output is useful only as a demonstration
    of that blowup. Binomial coefficients are formed exactly and rounded at
    the point of use, isolating the instability to the recurrence itself.
    """
    if precision < 24:
        raise ValueError("precision must be at least 24 bits")
    if n < 1:
        raise ValueError("n must be >= 1")
    zero = SoftFloat.from_fraction(0, precision)
    values = [
        SoftFloat.from_fraction(1, precision),
        SoftFloat.from_fraction(Fraction(-1, 2), precision),
    ]
    for k in range(2, n + 1):
        if k % 2:
            # holding odd entries at exact zero is what drives the growth
            values.append(zero)
            continue
        acc = values[0] + values[1] * (k + 1)
        for j in range(2, k, 2):
            acc = acc + values[j] * math.comb(k + 1, j)
        values.append(-(acc / (k + 1)))
    return values


def scaled_bernoulli_stable(n: int, precision: int) -> list[SoftFloat]:
    """Return [C_0..C_n] with C_k = B_{2k}/(2k)!, the well-conditioned route.

    Solves sum_{j<=k} C_j / ((2k+1-2j)! * 4**(k-j)) = 1/((2k)! * 4**k) for
    C_k at fixed precision; all terms beyond the first carry one sign, so
    errors grow only quadratically with k.
    """
    if precision < 24:
        raise ValueError("precision must be at least 24 bits")
    if n < 0:
        raise ValueError("n must be >= 0")
    values: list[SoftFloat] = []
    for k in range(n + 1):
        acc = SoftFloat.from_fraction(
            Fraction(1, math.factorial(2 * k) * 4**k), precision
        )
        for j in range(k):
            den = math.factorial(2 * k + 1 - 2 * j) * 4 ** (k - j)
            acc = acc - values[j] / den
        values.append(acc)  # the j = k coefficient is 1/(1! * 4**0) = 1
    return values
