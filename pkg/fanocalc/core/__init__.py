"""Core exceptions, rational helpers and schemas."""

from __future__ import annotations

from fanocalc.core.exceptions import FanoCalcError, ValidationError
from fanocalc.core.rational import Rational, format_rational, parse_rational

__all__ = [
    "FanoCalcError",
    "ValidationError",
    "Rational",
    "format_rational",
    "parse_rational",
]
