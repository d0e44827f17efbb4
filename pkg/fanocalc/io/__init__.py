"""Catalog exports."""

from fanocalc.io.export import catalog_from_csv, catalog_from_json, catalog_to_csv, catalog_to_json

__all__ = ["catalog_to_json", "catalog_from_json", "catalog_to_csv", "catalog_from_csv"]
