"""Exact rational helpers shared across the kernel.

All arithmetic in the library is over fractions.Fraction; floats appear only
at the final rendering step (SVG coordinates, decimal echoes in JSON).
"""

from fractions import Fraction
from typing import Union

Rational = Union[int, Fraction]


def frac(x: Rational) -> Fraction:
    """Coerce an int or Fraction to Fraction. Floats are rejected: callers
    that accept decimal text must convert it exactly first."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"expected an exact rational, got {type(x).__name__}")


def parse_rational(text: str) -> Fraction:
    """Parse "p/q", integer, or decimal text into an exact Fraction.

    Decimal strings are read base-10 exactly ("0.1" -> 1/10), never through
    binary floats.
    """
    s = str(text).strip()
    if not s:
        raise ValueError("empty rational literal")
    try:
        return Fraction(s)
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"not a rational literal: {text!r}") from exc


def format_rational(x: Rational) -> str:
    """Canonical exact text: "p/q" with q > 1, else the plain integer."""
    f = frac(x)
    if f.denominator == 1:
        return str(f.numerator)
    return f"{f.numerator}/{f.denominator}"


def falling_factorial(x: int, k: int) -> int:
    """x(x-1)...(x-k+1); equals 0 once the product crosses zero."""
    out = 1
    for i in range(k):
        out *= x - i
    return out
