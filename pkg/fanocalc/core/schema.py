"""JSON Schema definitions for catalog exports and verification reports."""

from __future__ import annotations

import importlib
from collections.abc import Callable
from typing import Any, cast

from fanocalc.core.exceptions import ValidationError

RATIONAL_PATTERN = r"^-?\d+/\d+$"

_RATIONAL: dict[str, Any] = {"type": "string", "pattern": RATIONAL_PATTERN}
_OPT_RATIONAL: dict[str, Any] = {"type": ["string", "null"], "pattern": RATIONAL_PATTERN}

BASKET_ENTRY_SCHEMA: dict[str, Any] = {
    "type": "object",
    "properties": {
        "r": {"type": "integer", "minimum": 2},
        "a": {"type": "integer", "minimum": 1},
        "count": {"type": "integer", "minimum": 1},
        "locus": {"type": "string", "pattern": r"^(vertex:[1-4]|edge:[1-4],[1-4])$"},
    },
    "required": ["r", "a", "count", "locus"],
    "additionalProperties": False,
}

POINT_SCHEMA: dict[str, Any] = {
    "type": "object",
    "properties": {
        **BASKET_ENTRY_SCHEMA["properties"],
        "ku3": _RATIONAL,
        "sign": {"enum": ["Neg", "Zero", "Pos"]},
        "involutions": {
            "type": "array",
            "items": {
                "type": "object",
                "properties": {
                    "kind": {"enum": ["Quadratic", "Elliptic"]},
                    "i": {"type": "integer", "minimum": 1, "maximum": 4},
                    "j": {"type": "integer", "minimum": 1, "maximum": 4},
                    "covering": {"type": "boolean"},
                },
                "required": ["kind", "i", "j"],
                "additionalProperties": False,
            },
        },
        "children": {"type": "array", "items": {"type": "string"}},
        "mu_bounds": {
            "type": "array",
            "items": {
                "type": "object",
                "properties": {
                    "upper_quadratic": _OPT_RATIONAL,
                    "upper_cap": _OPT_RATIONAL,
                    "lower_elliptic": _OPT_RATIONAL,
                },
            },
        },
    },
    "required": ["r", "a", "count", "locus", "ku3", "sign", "involutions", "children"],
    "additionalProperties": False,
}

# JSON Schema for one catalog record
RECORD_SCHEMA: dict[str, Any] = {
    "$schema": "http://json-schema.org/draft-07/schema#",
    "type": "object",
    "properties": {
        "gimel": {"type": "integer", "minimum": 1},
        "weights": {
            "type": "array",
            "items": {"type": "integer", "minimum": 1},
            "minItems": 4,
            "maxItems": 4,
        },
        "degree": {"type": "integer", "minimum": 4},
        "kx3": _RATIONAL,
        "basket": {"type": "array", "items": BASKET_ENTRY_SCHEMA},
        "points": {"type": "array", "items": POINT_SCHEMA},
    },
    "required": ["gimel", "weights", "degree", "kx3", "basket", "points"],
    "additionalProperties": False,
}

_INT_LIST: dict[str, Any] = {"type": "array", "items": {"type": "integer"}}

# JSON Schema for the ledger verification report
REPORT_SCHEMA: dict[str, Any] = {
    "$schema": "http://json-schema.org/draft-07/schema#",
    "type": "object",
    "properties": {
        "status": {"enum": ["Match", "AnomalyMatch", "Mismatch"]},
        "catalog_digest": {"type": "string"},
        "claims": {
            "type": "array",
            "items": {
                "type": "object",
                "properties": {
                    "id": {"type": "string"},
                    "status": {"enum": ["Match", "AnomalyMatch", "Mismatch", "Informational"]},
                    "computed": _INT_LIST,
                    "expected": _INT_LIST,
                    "missing": _INT_LIST,
                    "extra": _INT_LIST,
                    "anchor": {"type": "string"},
                },
                "required": ["id", "status", "computed", "missing", "extra", "anchor"],
            },
        },
        "fm": {
            "type": "array",
            "items": {
                "type": "object",
                "properties": {
                    "id": {"type": "string"},
                    "expected": {"enum": ["Feasible", "Infeasible"]},
                    "verdict": {"enum": ["Feasible", "Infeasible"]},
                    "certificate_ok": {"type": ["boolean", "null"]},
                },
                "required": ["id", "expected", "verdict", "certificate_ok"],
            },
        },
        "discrepancies": {"type": "array", "items": {"type": "object"}},
    },
    "required": ["status", "claims", "fm"],
}


def _validate(instance: dict[str, Any], schema: dict[str, Any], label: str) -> bool:
    try:
        jsonschema_module = importlib.import_module("jsonschema")
    except ImportError:
        # jsonschema not installed, skip validation
        return True

    validate_fn = cast(Callable[..., Any] | None, getattr(jsonschema_module, "validate", None))
    validation_error_cls = cast(
        type[Exception], getattr(jsonschema_module, "ValidationError", Exception)
    )
    if validate_fn is None:
        return True

    try:
        validate_fn(instance, schema)
        return True
    except validation_error_cls as exc:
        raise ValidationError(f"{label} validation failed: {exc}") from exc


def validate_record(record: dict[str, Any]) -> bool:
    """
    Validate a serialized family record.

    Returns:
        True if valid (or if jsonschema is not installed)

    Raises:
        ValidationError: If the record does not match the schema
    """
    return _validate(record, RECORD_SCHEMA, "Record")


def validate_report(report: dict[str, Any]) -> bool:
    """Validate a serialized verification report, like :func:`validate_record`."""
    return _validate(report, REPORT_SCHEMA, "Report")


__all__ = [
    "BASKET_ENTRY_SCHEMA",
    "POINT_SCHEMA",
    "RECORD_SCHEMA",
    "REPORT_SCHEMA",
    "validate_record",
    "validate_report",
]
