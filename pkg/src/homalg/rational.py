"""Exact rational scalars.

The ground field is realized by :class:`fractions.Fraction`: values are always
gcd-reduced with a positive denominator, arithmetic is exact at arbitrary
precision, and equality is structural.  ``rat`` / ``rat_str`` fix the textual
form used by structure files ("p/q", or a bare integer string).
"""

from __future__ import annotations

from fractions import Fraction

Scalar = Fraction

ZERO = Fraction(0)
ONE = Fraction(1)


def rat(value: int | str | Fraction) -> Fraction:
    """Coerce an int, Fraction, or "p/q" / "p" string to an exact rational."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"not a rational number: {value!r}") from exc
    raise ValueError(f"not a rational number: {value!r}")


def rat_str(value: Fraction) -> str:
    """Render a rational as "p" or "p/q" (the structure-file form)."""
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"
