"""Pytest configuration and fixtures."""


import pytest

from fanocalc import Catalog, enumerate_families
from fanocalc.catalog import MIN_MAX_WEIGHT


@pytest.fixture(scope="session")
def catalog() -> Catalog:
    """The full catalog; every family has weights below the smallest allowed bound."""
    return enumerate_families(max_weight=MIN_MAX_WEIGHT)


@pytest.fixture
def export_dir(tmp_path):
    """Directory for export files."""
    return tmp_path / "exports"
