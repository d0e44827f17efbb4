"""
fanocalc - exact arithmetic for weighted Fano threefold hypersurfaces

Enumerates the 95 families of quasismooth terminal anticanonically embedded
hypersurfaces in weighted projective 4-space, computes their singularity
baskets and blow-up invariants, and checks index-set claims about them.

Quick Start:
    >>> from fanocalc import enumerate_families, family
    >>>
    >>> catalog = enumerate_families()
    >>> record = family(catalog, 58)
    >>> record.ws.weights
    (3, 4, 7, 10)
"""

from fanocalc.__version__ import __version__

# Core
from fanocalc.blowup import PointAnalysis, analyse_point
from fanocalc.catalog import Catalog, FamilyRecord, enumerate_families, family
from fanocalc.core.exceptions import FanoCalcError

# Inequalities
from fanocalc.inequalities import check_certificate, fm_feasibility, golden_system, parse_system

# Ledger
from fanocalc.ledger import evaluate_claim, verify_all
from fanocalc.singularities import Basket, QuotientType, basket
from fanocalc.weighted_space import WeightSystem

__all__ = [
    "__version__",
    "WeightSystem",
    "QuotientType",
    "Basket",
    "basket",
    "PointAnalysis",
    "analyse_point",
    "FamilyRecord",
    "Catalog",
    "enumerate_families",
    "family",
    "FanoCalcError",
    "fm_feasibility",
    "check_certificate",
    "golden_system",
    "parse_system",
    "evaluate_claim",
    "verify_all",
]
