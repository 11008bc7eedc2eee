"""Cross-engine equality checks plus number-theoretic and analytic identities.

Every engine family is compared pairwise on the same inputs. Bernoulli
denominators are pinned exactly by the Von Staudt-Clausen theorem and by the
divisibility of their odd prime factors into 2**m - 1. Sizes and ratios are
held against their analytic bounds, and the fixed-precision recurrences are
contrasted with exact values. Pi enters only as a pair of rational bounds,
so every inequality here is decided in exact arithmetic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .fastfixed import (
    fast_secant_numbers,
    fast_tangent_numbers,
    least_half_block_bits,
    quotient_fraction_audit,
)
from .intops import IntegrityError
from .recurrences import (
    BernoulliSeq,
    TangentSeq,
    akiyama_tanigawa_bernoulli,
    atkinson_tangent_secant,
    bernoulli_float_unstable,
    bernoulli_from_tangent,
    scaled_bernoulli_stable,
    secant_numbers,
    tangent_numbers,
)
from .series import bernoulli_via_series


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    witness: str | None = None


@dataclass(frozen=True)
class VerificationReport:
    n: int
    checks: tuple[CheckResult, ...]

    @property
    def all_pass(self) -> bool:
        return all(check.passed for check in self.checks)


@lru_cache(maxsize=None)
def pi_bounds(bits: int = 256) -> tuple[Fraction, Fraction]:
    """Rational lo < pi < hi with hi - lo below 2**-bits.

    Machin's identity pi = 16 atan(1/5) - 4 atan(1/239). Each arctangent
    series alternates with strictly shrinking terms, so the partial sum and
    the first omitted term bracket the true value.
    """
    threshold = Fraction(1, 1 << (bits + 8))

    def atan_inv_bounds(x: int) -> tuple[Fraction, Fraction]:
        total = Fraction(0)
        k = 0
        power = x  # x**(2k+1)
        while True:
            term = Fraction(1, (2 * k + 1) * power)
            if term < threshold:
                break
            total += -term if k % 2 else term
            k += 1
            power *= x * x
        if k % 2:  # first omitted term is negative, so total sits above
            return total - term, total
        return total, total + term

    lo5, hi5 = atan_inv_bounds(5)
    lo239, hi239 = atan_inv_bounds(239)
    return 16 * lo5 - 4 * hi239, 16 * hi5 - 4 * lo239


@lru_cache(maxsize=None)
def _primes_to(limit: int) -> tuple[int, ...]:
    """All primes <= limit by a plain sieve."""
    if limit < 2:
        return ()
    flags = bytearray([1]) * (limit + 1)
    flags[0] = flags[1] = 0
    for p in range(2, math.isqrt(limit) + 1):
        if flags[p]:
            flags[p * p :: p] = bytearray(len(flags[p * p :: p]))
    return tuple(i for i, flag in enumerate(flags) if flag)


def _sequences_equal(name: str, left, right) -> CheckResult:
    if list(left) == list(right):
        return CheckResult(name, True)
    for index, (a, b) in enumerate(zip(left, right)):
        if a != b:
            return CheckResult(name, False, f"position {index}: {a} != {b}")
    return CheckResult(name, False, f"lengths differ: {len(left)} != {len(right)}")


def cross_check(n: int) -> VerificationReport:
    """Compare every engine pairwise on tangent, secant, and Bernoulli output."""
    if n < 1:
        raise ValueError("n must be >= 1")
    t_inplace, _ = tangent_numbers(n)
    s_inplace, _ = secant_numbers(n)
    t_triangle, s_triangle, _ = atkinson_tangent_secant(n)
    b_tangent_route = bernoulli_from_tangent(t_inplace)
    checks = (
        _sequences_equal(
            "tangent: in-place vs packed-division", t_inplace, fast_tangent_numbers(n)
        ),
        _sequences_equal("tangent: in-place vs triangle", t_inplace, t_triangle),
        _sequences_equal(
            "secant: in-place vs packed-division", s_inplace, fast_secant_numbers(n)
        ),
        _sequences_equal("secant: in-place vs triangle", s_inplace, s_triangle),
        _sequences_equal(
            "bernoulli: tangent route vs akiyama-tanigawa",
            b_tangent_route,
            akiyama_tanigawa_bernoulli(2 * n),
        ),
        _sequences_equal(
            "bernoulli: tangent route vs series reciprocal",
            b_tangent_route,
            bernoulli_via_series(2 * n),
        ),
    )
    return VerificationReport(n, checks)


def von_staudt_clausen(m: int, b: Fraction) -> int:
    """Return the integer b + sum(1/p) over primes p with (p-1) dividing m.

    Also insists den(b) is exactly the product of those primes. Either
    failure raises IntegrityError, since it proves b is not B_m.
    """
    if m < 2 or m % 2:
        raise ValueError("m must be a positive even integer")
    primes = [p for p in _primes_to(m + 1) if m % (p - 1) == 0]
    total = Fraction(b) + sum(Fraction(1, p) for p in primes)
    if total.denominator != 1:
        raise IntegrityError(f"B_{m} plus its prime reciprocals is not an integer: {total}")
    if Fraction(b).denominator != math.prod(primes):
        raise IntegrityError(
            f"denominator of B_{m} differs from the prime product {math.prod(primes)}"
        )
    return total.numerator


def zeta_ratio_check(n: int, b: Fraction) -> tuple[Fraction, Fraction]:
    """Enclose rho = |B_2n| (2 pi)**(2n) / (2 (2n)!) between exact rationals.

    rho equals the zeta value at 2n, so for n >= 2 it must lie strictly
    inside (1, 1 + 2**(1-2n)). The pi bounds carry 256 bits, double the
    128-bit working precision the tightest checked gap calls for.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    pi_lo, pi_hi = pi_bounds()
    scale = abs(Fraction(b)) / (2 * math.factorial(2 * n))
    return scale * (2 * pi_lo) ** (2 * n), scale * (2 * pi_hi) ** (2 * n)


def size_checks(tangent: TangentSeq, bernoulli: BernoulliSeq) -> VerificationReport:
    """Growth-rate checks tying tangent sizes to Bernoulli sizes.

    (a) T_k / (2k-1)! <= (2/pi)**(2k-2) for every k, decided with the
        rational upper bound on pi (which can only make the check harder);
    (b) the bit-length gap between T_n and the integer part of B_2n is 4n
        up to a 16 lg n allowance (needs n >= 2 for the allowance to bite);
    (c) bit-length(T_n) stays within 20 percent of 2n lg n once n >= 50.
    """
    n = len(tangent)
    if n < 1 or len(bernoulli) != 2 * n + 1:
        raise ValueError("expected [T_1..T_n] with matching [B_0..B_2n]")
    checks = []
    _, pi_hi = pi_bounds()
    ok, witness = True, None
    pi_power = Fraction(1)  # pi_hi**(2k-2)
    factorial = 1  # (2k-1)!
    four_power = 1  # 4**(k-1)
    for k in range(1, n + 1):
        if k > 1:
            pi_power *= pi_hi * pi_hi
            factorial *= (2 * k - 2) * (2 * k - 1)
            four_power *= 4
        if tangent[k - 1] * pi_power > factorial * four_power:
            ok, witness = False, f"k={k}: T_k exceeds (2k-1)! (2/pi)**(2k-2)"
            break
    checks.append(CheckResult("tangent coefficient bound", ok, witness))
    if n >= 2:
        gap = tangent[-1].bit_length() - int(abs(bernoulli[2 * n])).bit_length()
        slack = 16 * math.log2(n)
        ok = 4 * n - slack <= gap <= 4 * n + slack
        checks.append(
            CheckResult(
                "tangent vs bernoulli bit gap",
                ok,
                None if ok else f"gap={gap} outside 4n +- 16 lg n at n={n}",
            )
        )
    if n >= 50:
        ratio = tangent[-1].bit_length() / (2 * n * math.log2(n))
        ok = 0.8 <= ratio <= 1.2
        checks.append(
            CheckResult(
                "tangent bit growth rate", ok, None if ok else f"ratio={ratio:.3f}"
            )
        )
    return VerificationReport(n, tuple(checks))


def fermat_denominator_check(m: int, b: Fraction) -> bool:
    """True iff every odd prime factor of den(B_m) divides 2**m - 1.

    Denominators of true Bernoulli numbers factor over the primes up to
    m+1; any leftover cofactor beyond those is already proof the value is
    not B_m, so it fails the check.
    """
    if m < 2 or m % 2:
        raise ValueError("m must be a positive even integer")
    target = (1 << m) - 1
    rest = Fraction(b).denominator
    for p in _primes_to(m + 1):
        if rest % p == 0:
            if p != 2 and target % p != 0:
                return False
            while rest % p == 0:
                rest //= p
    return rest == 1


def tangent_tail_audit(n: int, extra_terms: int = 5) -> tuple[Fraction, Fraction]:
    """Exact bounds on the series tail the packed tangent quotient drops.

    Sums the next `extra_terms` terms T_k (2n-1)!/(2k-1)! x**(2(k-n))
    exactly at x = 2**(-p), then covers everything beyond them with a 3
    percent allowance: consecutive terms of the tangent series shrink by at
    least a factor (pi/2)**2 per order, so at x <= 1/4 each tail term is
    under 0.026 of its predecessor. The packing argument needs the tail
    inside (0, 1/10).
    """
    if n < 2:
        raise ValueError("n must be >= 2")
    p = least_half_block_bits(n)
    values, _ = tangent_numbers(n + extra_terms)
    explicit = Fraction(0)
    ratio = 1  # (2k-1)!/(2n-1)! for the current k, descending factorials
    for k in range(n + 1, n + extra_terms + 1):
        ratio *= (2 * k - 2) * (2 * k - 1)
        explicit += Fraction(values[k - 1], ratio << (2 * (k - n) * p))
    return explicit, explicit * Fraction(103, 100)


def stability_contrast(precision: int = 53) -> VerificationReport:
    """Contrast the unstable and stable fixed-precision Bernoulli routes.

    Thresholds are calibrated for 53-bit arithmetic and scale by powers of
    two at other precisions. The breakdown check uses the 4**m error model,
    which predicts relative error above 1 at index 60 only for precisions
    up to 56 bits; beyond that it is omitted.
    """
    if precision < 24:
        raise ValueError("precision must be at least 24 bits")
    scale = Fraction(2) ** (53 - precision)
    exact = bernoulli_from_tangent(tangent_numbers(40)[0])  # B_0..B_80
    unstable = bernoulli_float_unstable(60, precision)
    low_worst = max(unstable[m].relative_error(exact[m]) for m in range(2, 21, 2))
    checks = [
        CheckResult(
            "unstable recurrence accurate through index 20",
            low_worst < Fraction(1, 10**8) * scale,
            f"worst relative error {float(low_worst):.3e}",
        )
    ]
    if precision <= 56:
        err_60 = unstable[60].relative_error(exact[60])
        checks.append(
            CheckResult(
                "unstable recurrence breaks down by index 60",
                err_60 > 1,
                f"relative error {float(err_60):.3e}",
            )
        )
    stable = scaled_bernoulli_stable(40, precision)
    worst = Fraction(0)
    factorial = 1  # (2k)!
    for k in range(41):
        if k:
            factorial *= (2 * k - 1) * (2 * k)
        worst = max(worst, stable[k].relative_error(exact[2 * k] / factorial))
    checks.append(
        CheckResult(
            "scaled recurrence accurate through C_40",
            worst < Fraction(1, 10**12) * scale,
            f"worst relative error {float(worst):.3e}",
        )
    )
    return VerificationReport(60, tuple(checks))


def full_verification(n: int, precision: int | None = None) -> VerificationReport:
    """Run every check family at size n; optionally add the float contrast."""
    if n < 1:
        raise ValueError("n must be >= 1")
    checks = list(cross_check(n).checks)
    tangent, _ = tangent_numbers(n)
    bernoulli = bernoulli_from_tangent(tangent)

    ok, witness = True, None
    for k in range(1, n + 1):
        try:
            von_staudt_clausen(2 * k, bernoulli[2 * k])
        except IntegrityError as exc:
            ok, witness = False, f"index {2 * k}: {exc}"
            break
    checks.append(CheckResult("von staudt-clausen denominators", ok, witness))

    ok, witness = True, None
    for k in range(1, n + 1):
        if not fermat_denominator_check(2 * k, bernoulli[2 * k]):
            ok, witness = False, f"index {2 * k}"
            break
    checks.append(CheckResult("denominator primes divide 2**m - 1", ok, witness))

    ok, witness = True, None
    for k in range(2, n + 1):
        lo, hi = zeta_ratio_check(k, bernoulli[2 * k])
        if not (1 < lo and hi < 1 + Fraction(2) ** (1 - 2 * k)):
            ok, witness = False, f"index {2 * k}: enclosure ({float(lo)}, {float(hi)})"
            break
    checks.append(CheckResult("zeta ratio enclosure", ok, witness))

    checks.extend(size_checks(tangent, bernoulli).checks)

    if n >= 2:
        ok, witness = True, None
        for k in range(2, min(n, 30) + 1):
            lo, hi = tangent_tail_audit(k)
            if not (0 < lo and hi < Fraction(1, 10)):
                ok, witness = False, f"n={k}"
                break
        checks.append(CheckResult("packed-quotient tail bound", ok, witness))

        ok, witness = True, None
        for k in range(2, n + 1):
            if quotient_fraction_audit(k) >= Fraction(12, 100):
                ok, witness = False, f"n={k}"
                break
        checks.append(CheckResult("packed-quotient rounding budget", ok, witness))

    if precision is not None:
        checks.extend(stability_contrast(precision).checks)
    return VerificationReport(n, tuple(checks))
