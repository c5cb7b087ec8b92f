"""Exact integer and rational scalar primitives.

Every quantity in this package is exact: plain ``int`` (arbitrary precision)
for integers and ``fractions.Fraction`` for rationals.  ``Fraction`` already
guarantees the normal form the rest of the library relies on -- reduced to
lowest terms, positive denominator, zero stored as 0/1 -- so value equality
is structural equality.  No floating point is used anywhere.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb

Scalar = int | Fraction


def binomial(m: int, k: int) -> int:
    """Binomial coefficient C(m, k), generalized to any integer top.

    Defined as falling_factorial(m, k) / k!, which is an integer for every
    integer ``m``.  Total by design: ``k < 0`` returns 0, so summations over
    shifted indices need no boundary guards.  For a negative top,
    C(-n, k) == (-1)**k * C(n + k - 1, k).
    """
    if k < 0:
        return 0
    if m >= 0:
        return comb(m, k)
    value = comb(k - m - 1, k)
    return -value if k % 2 else value


def multichoose(n: int, k: int) -> int:
    """Number of k-multisets drawn from n items: C(n + k - 1, k)."""
    if k < 0:
        raise ValueError(f"multichoose: k must be >= 0, got {k}")
    return binomial(n + k - 1, k)


def falling_factorial(x: Scalar, k: int) -> Scalar:
    """Falling factorial x * (x - 1) * ... * (x - k + 1).

    The empty product (k == 0) is 1.  Exact for int and Fraction inputs.
    """
    if k < 0:
        raise ValueError(f"falling_factorial: k must be >= 0, got {k}")
    result: Scalar = 1
    for i in range(k):
        result = result * (x - i)
    return result


def format_scalar(value: Scalar) -> str:
    """Serialize a scalar: decimal string, or "num/den" when den > 1."""
    if isinstance(value, Fraction):
        if value.denominator == 1:
            return str(value.numerator)
        return f"{value.numerator}/{value.denominator}"
    return str(value)


def parse_rational(text: str) -> Fraction:
    """Parse "p/q" or a bare integer string into an exact Fraction."""
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"not a rational: {text!r}") from exc
