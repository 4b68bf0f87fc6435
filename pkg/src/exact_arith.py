"""
Exact integer helpers with 64-bit overflow checks.
"""

from math import comb

from config import U64_MAX
from errors import InternalInconsistency


def check_u64(value: int, what: str = "value") -> int:
    """Raise OverflowError unless 0 <= value <= 2**64 - 1."""
    if value > U64_MAX:
        raise OverflowError(f"{what} {value} does not fit in 64 bits")
    return value


def binom(a: int, b: int) -> int:
    """
    Binomial coefficient C(a, b) with the conventions used throughout the toolkit.

    Returns 0 when b < 0 or a < b, so C(0, 1) = 0 and C(-1, 0) = 0.
    """
    if b < 0 or a < b:
        return 0
    return check_u64(comb(a, b), f"C({a},{b})")


def checked_add(*terms: int) -> int:
    return check_u64(sum(terms), "sum")


def checked_mul(a: int, b: int) -> int:
    return check_u64(a * b, "product")


def exact_div(numerator: int, divisor: int, what: str) -> int:
    """Divide, asserting the remainder is zero."""
    quotient, remainder = divmod(numerator, divisor)
    if remainder:
        raise InternalInconsistency(f"{what}: {numerator} is not divisible by {divisor}")
    return quotient
