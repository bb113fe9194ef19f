"""Exact rationals: parsing, canonical text, and conversion to sympy's QQ."""

from fractions import Fraction
from typing import Any

from sympy import QQ

from arith.errors import UsageError

RationalLike = Fraction | int | str


def parse_rational(value: RationalLike) -> Fraction:
    """Read an exact rational from ``"p"``, ``"p/q"``, an int or a Fraction.

    Decimal strings are rejected: exponents and coordinates must stay exact.
    """
    if isinstance(value, bool):
        raise UsageError(f"Not a rational: {value!r}")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if not isinstance(value, str):
        raise UsageError(f"Not a rational: {value!r}")
    text = value.strip()
    if not text:
        raise UsageError("Rational cannot be empty")
    if any(c in text for c in ".eE"):
        raise UsageError(f"Rational must be written as p or p/q, got {value!r}")
    try:
        result = Fraction(text)
    except (ValueError, ZeroDivisionError) as e:
        raise UsageError(f"Not a rational: {value!r}") from e
    return result


def format_rational(value: Fraction | int) -> str:
    """Canonical ``p`` or ``p/q`` text."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def to_qq(value: Fraction | int) -> Any:
    value = Fraction(value)
    return QQ(value.numerator, value.denominator)


def from_qq(coeff: Any) -> Fraction:
    """Convert a QQ or ZZ ground element back to a Fraction."""
    q = QQ.convert(coeff)
    return Fraction(int(q.numerator), int(q.denominator))
