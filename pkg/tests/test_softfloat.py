"""Tests for the fixed-precision binary floating-point type."""

from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from btseq.softfloat import SoftFloat


def fractions(max_num=10**12, max_den=10**12):
    return st.fractions(
        min_value=-max_num, max_value=max_num, max_denominator=max_den
    )


class TestRounding:
    def test_zero(self):
        z = SoftFloat.from_fraction(0, 7)
        assert (z.sign, z.significand, z.exponent) == (0, 0, 0)
        assert z.to_fraction() == 0

    def test_exact_values_survive(self):
        x = SoftFloat.from_fraction(Fraction(3, 4), 10)
        assert x.to_fraction() == Fraction(3, 4)
        assert x.significand.bit_length() == 10

    def test_half_even_ties_at_three_bits(self):
        # 3 significant bits: 9 = 0b1001 is halfway between 8 and 10; even wins
        assert SoftFloat.from_fraction(9, 3).to_fraction() == 8
        assert SoftFloat.from_fraction(11, 3).to_fraction() == 12
        assert SoftFloat.from_fraction(Fraction(15, 4), 3).to_fraction() == 4

    def test_binade_carry(self):
        # rounding up out of the top of the significand renormalizes
        x = SoftFloat.from_fraction(Fraction(255, 128), 7)
        assert x.to_fraction() == 2
        assert x.significand.bit_length() == 7

    @given(fractions(), st.integers(2, 80))
    def test_relative_error_bound(self, value, precision):
        x = SoftFloat.from_fraction(value, precision)
        if value == 0:
            assert x.to_fraction() == 0
        else:
            assert x.relative_error(value) <= Fraction(1, 2**precision)

    @given(fractions(), st.integers(2, 60))
    def test_significand_width(self, value, precision):
        x = SoftFloat.from_fraction(value, precision)
        if value != 0:
            assert x.significand.bit_length() == precision

    def test_rejects_bad_precision(self):
        with pytest.raises(ValueError):
            SoftFloat.from_fraction(1, 0)


class TestArithmetic:
    def test_operator_round_trip(self):
        a = SoftFloat.from_fraction(Fraction(1, 3), 53)
        b = SoftFloat.from_fraction(Fraction(1, 7), 53)
        assert float(a + b) == 1 / 3 + 1 / 7
        assert float(a - b) == 1 / 3 - 1 / 7
        assert float(a * b) == (1 / 3) * (1 / 7)
        assert float(a / b) == (1 / 3) / (1 / 7)

    def test_int_and_fraction_operands_coerce(self):
        a = SoftFloat.from_fraction(Fraction(5, 8), 24)
        assert (a * 4).to_fraction() == Fraction(5, 2)
        assert (a + Fraction(3, 8)).to_fraction() == 1

    def test_neg_abs(self):
        a = SoftFloat.from_fraction(Fraction(-7, 16), 12)
        assert (-a).to_fraction() == Fraction(7, 16)
        assert abs(a).to_fraction() == Fraction(7, 16)

    def test_mixed_precision_rejected(self):
        a = SoftFloat.from_fraction(1, 24)
        b = SoftFloat.from_fraction(1, 53)
        with pytest.raises(ValueError):
            a + b

    @given(fractions(10**6, 10**6), fractions(10**6, 10**6))
    def test_matches_float64(self, x, y):
        # at 53 bits every operation must agree with the platform double
        a = SoftFloat.from_fraction(x, 53)
        b = SoftFloat.from_fraction(y, 53)
        assert a.to_fraction() == Fraction(float(x))
        assert float(a + b) == float(x) + float(y)
        assert float(a - b) == float(x) - float(y)
        assert float(a * b) == float(x) * float(y)
        if y != 0:
            assert float(a / b) == float(x) / float(y)

    @given(fractions(10**9, 10**9), fractions(10**9, 10**9), st.integers(4, 64))
    def test_single_rounding_per_op(self, x, y, precision):
        a = SoftFloat.from_fraction(x, precision)
        b = SoftFloat.from_fraction(y, precision)
        exact = a.to_fraction() + b.to_fraction()
        got = (a + b).to_fraction()
        if exact == 0:
            assert got == 0
        else:
            assert abs(got - exact) / abs(exact) <= Fraction(1, 2**precision)

    def test_relative_error_against_zero_rejected(self):
        with pytest.raises(ValueError):
            SoftFloat.from_fraction(1, 8).relative_error(0)
