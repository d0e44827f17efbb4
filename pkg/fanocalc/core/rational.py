"""Exact rational helpers.

All quantities in fanocalc are :class:`fractions.Fraction` values. They are
normalized on construction, so equality is structural and nothing is rounded.
"""

from __future__ import annotations

import re
from fractions import Fraction

Rational = Fraction

_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$")


def format_rational(value: Fraction) -> str:
    """Render a rational as ``"p/q"`` with an explicit denominator."""
    return f"{value.numerator}/{value.denominator}"


def parse_rational(text: str) -> Fraction:
    """Parse ``"p/q"`` or ``"p"`` into a Fraction.

    Raises:
        ValueError: If ``text`` is not an integer or integer ratio, or the
            denominator is zero.
    """
    match = _RATIONAL_RE.match(text)
    if match is None:
        raise ValueError(f"Invalid rational '{text}'")
    numerator = int(match.group(1))
    denominator = int(match.group(2)) if match.group(2) is not None else 1
    if denominator == 0:
        raise ValueError(f"Zero denominator in '{text}'")
    return Fraction(numerator, denominator)


__all__ = ["Rational", "format_rational", "parse_rational"]
