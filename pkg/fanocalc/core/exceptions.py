"""Exceptions for fanocalc."""

from __future__ import annotations

from collections.abc import Sequence


class FanoCalcError(Exception):
    """Base exception for fanocalc errors."""

    pass


class ValidationError(FanoCalcError):
    """Raised when a serialized value violates a domain invariant."""

    pass


class ConversionError(FanoCalcError):
    """Raised when an export cannot be read back consistently."""

    pass


class CountMismatchError(FanoCalcError):
    """Raised when enumeration does not find the expected number of families."""

    def __init__(self, found: int, expected: int = 95) -> None:
        super().__init__(f"Enumeration found {found} families, expected {expected}")
        self.found = found
        self.expected = expected


class AnchorMismatchError(FanoCalcError):
    """Raised when a known ordinal does not land on its weight system."""

    def __init__(self, mismatches: Sequence[str]) -> None:
        super().__init__("Ordinal anchors failed: " + "; ".join(mismatches))
        self.mismatches = list(mismatches)


class OutOfRangeError(FanoCalcError):
    """Raised when a family ordinal is outside the catalog."""

    pass


class KindMismatchError(FanoCalcError):
    """Raised when an involution is requested at a point that does not carry it."""

    pass


class NotApplicableError(FanoCalcError):
    """Raised when a formula does not apply to the given involution."""

    pass


class DimensionMismatchError(FanoCalcError):
    """Raised when a certificate does not match the constraint count."""

    pass


class UnknownIdError(FanoCalcError):
    """Raised for an unknown golden-system or ledger-claim identifier."""

    pass


class ParseError(FanoCalcError):
    """Raised when the inequality text format cannot be parsed."""

    def __init__(self, line: int, message: str) -> None:
        super().__init__(f"line {line}: {message}")
        self.line = line


__all__ = [
    "FanoCalcError",
    "ValidationError",
    "ConversionError",
    "CountMismatchError",
    "AnchorMismatchError",
    "OutOfRangeError",
    "KindMismatchError",
    "NotApplicableError",
    "DimensionMismatchError",
    "UnknownIdError",
    "ParseError",
]
