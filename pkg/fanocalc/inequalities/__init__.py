"""Linear inequality systems, Fourier–Motzkin elimination and the golden registry."""

from __future__ import annotations

from fanocalc.inequalities.engine import check_certificate, fm_feasibility
from fanocalc.inequalities.golden import GOLDEN_SYSTEMS, golden_entry, golden_system
from fanocalc.inequalities.parser import parse_system
from fanocalc.inequalities.system import (
    Constraint,
    Feasible,
    FeasibilityResult,
    Infeasible,
    InfeasibilityCertificate,
    LinearSystem,
    Relation,
    Verdict,
)

__all__ = [
    "Constraint",
    "LinearSystem",
    "Relation",
    "Verdict",
    "Feasible",
    "Infeasible",
    "FeasibilityResult",
    "InfeasibilityCertificate",
    "fm_feasibility",
    "check_certificate",
    "parse_system",
    "GOLDEN_SYSTEMS",
    "golden_entry",
    "golden_system",
]
