"""Claims about the catalog and the verification report."""

from __future__ import annotations

from fanocalc.ledger.claims import CLAIMS, ClaimResult, ClaimStatus, evaluate_claim
from fanocalc.ledger.report import VerificationReport, verify_all

__all__ = [
    "CLAIMS",
    "ClaimResult",
    "ClaimStatus",
    "evaluate_claim",
    "VerificationReport",
    "verify_all",
]
