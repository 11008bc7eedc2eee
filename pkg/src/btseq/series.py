"""Truncated power series reciprocal over exact rationals.

The reciprocal runs Newton's doubling iteration b <- b * (2 - a * b); each
pass doubles the number of settled coefficients. Multiplication is plain
schoolbook convolution, everything stays a Fraction, and every returned
reciprocal is re-verified against the defining convolution identity before
it leaves this module. Applying the reciprocal to the series of
(exp(z) - 1) / z yields the Bernoulli numbers.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .intops import IntegrityError
from .recurrences import BernoulliSeq


@dataclass(frozen=True)
class SeriesTrunc:
    """A truncated power series; coeffs[j] multiplies z**j."""

    coeffs: tuple[Fraction, ...]

    @property
    def order(self) -> int:
        return len(self.coeffs)


def _convolve(a, b, order: int) -> list[Fraction]:
    """The product series of a and b, truncated to `order` coefficients."""
    out = [Fraction(0)] * order
    for i, ai in enumerate(a[:order]):
        if not ai:
            continue
        for j, bj in enumerate(b[: order - i]):
            if bj:
                out[i + j] += ai * bj
    return out


def check_reciprocal(a: SeriesTrunc, b: SeriesTrunc) -> None:
    """Verify sum_j a_j b_{m-j} = [m == 0] for every m below b's order."""
    product = _convolve(a.coeffs, b.coeffs, b.order)
    if product[0] != 1 or any(product[1:]):
        raise IntegrityError("series reciprocal violates its convolution identity")


def series_reciprocal(a: SeriesTrunc, order: int) -> SeriesTrunc:
    """Return b with a * b = 1 modulo z**order, by Newton doubling."""
    if order < 1:
        raise ValueError("order must be positive")
    if not a.coeffs or a.coeffs[0] == 0:
        raise ValueError("series must have a nonzero constant term")
    b = [Fraction(1) / a.coeffs[0]]
    settled = 1
    while settled < order:
        settled = min(2 * settled, order)
        ab = _convolve(a.coeffs, b, settled)
        correction = [2 - ab[0]] + [-c for c in ab[1:]]
        b = _convolve(b, correction, settled)
    result = SeriesTrunc(tuple(b))
    check_reciprocal(a, result)
    return result


def bernoulli_via_series(n: int) -> BernoulliSeq:
    """Return [B_0..B_n] by inverting the series of (exp(z) - 1) / z.

    That series has coefficients 1/(j+1)!; the reciprocal's coefficient of
    z**j times j! is B_j.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    coeffs = []
    factorial = 1
    for j in range(n + 1):
        factorial *= j + 1
        coeffs.append(Fraction(1, factorial))
    reciprocal = series_reciprocal(SeriesTrunc(tuple(coeffs)), n + 1)
    out: BernoulliSeq = []
    factorial = 1
    for j, coeff in enumerate(reciprocal.coeffs):
        if j:
            factorial *= j
        out.append(coeff * factorial)
    return out
