"""Rational helpers on top of :class:`fractions.Fraction`.

``Fraction`` already keeps lowest terms with a positive denominator, so it is
used directly as the package's ``Rational``.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Optional, Union

from ..core.errors import ValidationError

Rational = Fraction
RationalLike = Union[int, str, Fraction]


def to_rational(value: RationalLike) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise ValidationError("Booleans are not rationals", context={"value": value})
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise ValidationError(
        f"Expected an exact rational, got {type(value).__name__}",
        context={"value": repr(value)},
    )


def parse_rational(text: str) -> Fraction:
    """Parse ``"p/q"`` or ``"p"``; floats are refused."""

    s = text.strip()
    if not s or any(ch in s for ch in ".eE"):
        raise ValidationError(f"Not a rational 'p/q' string: {text!r}", context={"value": text})
    try:
        return Fraction(s)
    except (ValueError, ZeroDivisionError) as exc:
        raise ValidationError(f"Not a rational 'p/q' string: {text!r}", context={"value": text}) from exc


def format_rational(q: Fraction) -> str:
    return str(q)


def exact_sqrt(q: Fraction) -> Optional[Fraction]:
    """Rational square root of q, or None when q is not a rational square."""

    if q < 0:
        return None
    num, den = q.numerator, q.denominator
    rn, rd = math.isqrt(num), math.isqrt(den)
    if rn * rn == num and rd * rd == den:
        return Fraction(rn, rd)
    return None


def sqrt_upper_bound(q: Fraction) -> Fraction:
    """A rational >= sqrt(q) for q >= 0."""

    root = exact_sqrt(q)
    if root is not None:
        return root
    # isqrt(den) <= sqrt(den), so the quotient overshoots
    return Fraction(math.isqrt(q.numerator) + 1, max(math.isqrt(q.denominator), 1))
