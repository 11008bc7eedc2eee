"""Exact integer primitives shared by every engine.

Values are plain Python ints, so precision is unbounded. These helpers add
the few operations the engines need beyond the builtin operators: factorial
ratios without forming full factorials, correctly rounded division, division
that must come out exact, and a fixed-width bit-block codec.
"""

from __future__ import annotations

import math
from typing import Sequence


class IntegrityError(ArithmeticError):
    """An exactness guarantee failed, meaning upstream arithmetic is wrong."""


def factorial_ratio(a: int, b: int) -> int:
    """Return a!/b! = (b+1)(b+2)...a for a >= b >= 0."""
    if b < 0 or a < b:
        raise ValueError(f"need a >= b >= 0, got a={a}, b={b}")
    return math.prod(range(b + 1, a + 1))


def round_nearest_div(num: int, den: int) -> int:
    """Round num/den to the nearest integer, halves away from zero."""
    if den <= 0:
        raise ValueError("denominator must be positive")
    if num < 0:
        raise ValueError("numerator must be nonnegative")
    q, r = divmod(num, den)
    return q + (1 if 2 * r >= den else 0)


def exact_div(num: int, den: int) -> int:
    """Divide two integers and insist the division leaves no remainder."""
    if den == 0:
        raise ValueError("division by zero")
    q, r = divmod(num, den)
    if r:
        raise IntegrityError(f"{den} does not divide {num}")
    return q


def extract_blocks(value: int, width: int, count: int) -> list[int]:
    """Split value into count blocks of `width` bits, most significant first."""
    if width <= 0 or count <= 0:
        raise ValueError("width and count must be positive")
    if value < 0:
        raise ValueError("value must be nonnegative")
    if value >> (width * count):
        raise OverflowError(f"value does not fit in {count} blocks of {width} bits")
    mask = (1 << width) - 1
    return [(value >> (width * k)) & mask for k in range(count - 1, -1, -1)]


def pack_blocks(blocks: Sequence[int], width: int) -> int:
    """Inverse of extract_blocks: concatenate fixed-width blocks into one int."""
    if width <= 0:
        raise ValueError("width must be positive")
    value = 0
    for block in blocks:
        if not 0 <= block < (1 << width):
            raise OverflowError(f"block {block} does not fit in {width} bits")
        value = (value << width) | block
    return value
