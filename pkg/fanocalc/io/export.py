"""JSON and CSV exports of the catalog.

Both formats are deterministic: fixed key and column order, rationals as
``"p/q"`` strings and a trailing newline. Reading an export back re-derives
every family from its weights and refuses files that disagree.
"""

from __future__ import annotations

import csv
import io
import json
import logging
from pathlib import Path
from typing import Any, Literal

from fanocalc.catalog import CSV_COLUMNS, Catalog, FamilyRecord, build_record
from fanocalc.core.exceptions import ConversionError, FanoCalcError
from fanocalc.core.schema import validate_record
from fanocalc.utils.hashing import verify_digest
from fanocalc.weighted_space import WeightSystem

logger = logging.getLogger(__name__)

ExportFormat = Literal["json", "csv"]


def catalog_to_json(catalog: Catalog) -> str:
    records = [record.to_dict() for record in catalog]
    return json.dumps(records, indent=2, ensure_ascii=False) + "\n"


def catalog_from_json(text: str) -> Catalog:
    """Parse a JSON export, validating each record against a fresh recomputation.

    Raises:
        ConversionError: If the text is not a valid export.
    """
    try:
        payload: Any = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ConversionError(f"Invalid JSON export: {exc}") from exc
    if not isinstance(payload, list):
        raise ConversionError("JSON export must be a list of records")

    records: list[FamilyRecord] = []
    for item in payload:
        try:
            validate_record(item)
            record = FamilyRecord.from_dict(item)
        except FanoCalcError as exc:
            raise ConversionError(str(exc)) from exc
        if record != build_record(record.gimel, record.ws):
            raise ConversionError(f"Record ℷ={record.gimel} does not match its weights")
        records.append(record)
    try:
        return Catalog(tuple(records))
    except ValueError as exc:
        raise ConversionError(str(exc)) from exc


def catalog_to_csv(catalog: Catalog) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for record in catalog:
        writer.writerow(record.csv_row())
    return buffer.getvalue()


def catalog_from_csv(text: str) -> Catalog:
    """Rebuild a catalog from a CSV export.

    CSV rows carry only a summary, so each row is recomputed from its weights
    and the stored degree, ``kx3``, basket and involution columns are compared.

    Raises:
        ConversionError: On a malformed header or a row that disagrees.
    """
    reader = csv.DictReader(io.StringIO(text))
    if reader.fieldnames != CSV_COLUMNS:
        raise ConversionError(f"Unexpected CSV header: {reader.fieldnames}")

    records: list[FamilyRecord] = []
    for row in reader:
        try:
            a1, a2, a3, a4 = (int(row[f"a{k}"]) for k in range(1, 5))
            record = build_record(int(row["gimel"]), WeightSystem((a1, a2, a3, a4)))
        except (TypeError, ValueError, FanoCalcError) as exc:
            raise ConversionError(f"Invalid CSV row {row}: {exc}") from exc
        expected = dict(zip(CSV_COLUMNS, record.csv_row()))
        if expected != dict(row):
            raise ConversionError(f"CSV row for ℷ={record.gimel} does not match its weights")
        records.append(record)
    try:
        return Catalog(tuple(records))
    except ValueError as exc:
        raise ConversionError(str(exc)) from exc


def export(catalog: Catalog, fmt: ExportFormat) -> str:
    if fmt == "json":
        return catalog_to_json(catalog)
    if fmt == "csv":
        return catalog_to_csv(catalog)
    raise ValueError(f"Unknown export format '{fmt}'")


def write_export(catalog: Catalog, path: str | Path, fmt: ExportFormat) -> str:
    """Write the export to ``path``, creating parent directories, and return its text."""
    target = Path(path)
    target.parent.mkdir(parents=True, exist_ok=True)
    text = export(catalog, fmt)
    target.write_text(text, encoding="utf-8")
    logger.info("Wrote %d families to %s", len(catalog), target)
    return text


def read_export(path: str | Path, digest: str | None = None) -> Catalog:
    """Load a catalog export, picking the format from the file suffix.

    Args:
        path: Export file written by :func:`write_export`
        digest: Optional ``sha256:`` digest the file contents must match,
            as printed by ``fanocalc enumerate``

    Raises:
        ConversionError: If the contents do not match ``digest`` or their weights.
    """
    target = Path(path)
    text = target.read_text(encoding="utf-8")
    if digest is not None:
        try:
            matches = verify_digest(text, digest)
        except ValueError as exc:
            raise ConversionError(str(exc)) from exc
        if not matches:
            raise ConversionError(f"{target} does not match digest {digest}")
    if target.suffix.lower() == ".csv":
        return catalog_from_csv(text)
    return catalog_from_json(text)


__all__ = [
    "ExportFormat",
    "catalog_to_json",
    "catalog_from_json",
    "catalog_to_csv",
    "catalog_from_csv",
    "export",
    "write_export",
    "read_export",
]
