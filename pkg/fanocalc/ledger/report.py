"""Full verification run: every claim, every golden system, one report."""

from __future__ import annotations

import json
import logging
from typing import Any

from pydantic import BaseModel, Field, field_validator

from fanocalc.blowup import CurveVariant, InvolutionKind, blowup_children, contracted_curves
from fanocalc.catalog import Catalog, family
from fanocalc.core.rational import format_rational
from fanocalc.inequalities.engine import check_certificate, fm_feasibility
from fanocalc.inequalities.golden import GOLDEN_SYSTEMS
from fanocalc.inequalities.system import Feasible, Verdict
from fanocalc.io.export import catalog_to_json
from fanocalc.ledger.claims import CLAIMS, ClaimResult, ClaimStatus, evaluate, worst_status
from fanocalc.utils.hashing import digest_text

logger = logging.getLogger(__name__)

ALLOWED_DISCREPANCY_KINDS = {
    "anomaly",
    "soft-claim",
    "informational",
    "fm-verdict",
    "transcription",
}


class FmResult(BaseModel):
    """Verdict of one golden system."""

    id: str
    expected: Verdict
    verdict: Verdict
    certificate_ok: bool | None = None
    witness: dict[str, str] | None = None
    multipliers: list[str] | None = None


class Discrepancy(BaseModel):
    """A documented difference between a computed value and its stated counterpart."""

    kind: str
    subject: str
    message: str
    data: dict[str, Any] = Field(default_factory=dict)

    @field_validator("kind")
    @classmethod
    def validate_kind(cls, v: str) -> str:
        if v not in ALLOWED_DISCREPANCY_KINDS:
            raise ValueError(
                f"Invalid discrepancy kind '{v}'. "
                f"Allowed kinds: {sorted(ALLOWED_DISCREPANCY_KINDS)}"
            )
        return v


class VerificationReport(BaseModel):
    """Outcome of :func:`verify_all`."""

    status: ClaimStatus
    catalog_digest: str
    claims: list[ClaimResult]
    fm: list[FmResult]
    discrepancies: list[Discrepancy] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.status in (ClaimStatus.MATCH, ClaimStatus.ANOMALY_MATCH)

    def claim(self, claim_id: str) -> ClaimResult:
        return next(result for result in self.claims if result.id == claim_id)

    def to_dict(self) -> dict[str, Any]:
        """Convert VerificationReport to dictionary."""
        return self.model_dump(mode="json")

    def to_json(self) -> str:
        """Convert VerificationReport to an indented JSON string."""
        return json.dumps(self.to_dict(), indent=2, ensure_ascii=False) + "\n"

    @classmethod
    def from_json(cls, json_str: str) -> VerificationReport:
        """Create VerificationReport from JSON string."""
        return cls.model_validate(json.loads(json_str))


def run_golden_systems() -> list[FmResult]:
    """Decide every registered golden system and replay its certificate."""
    results: list[FmResult] = []
    for system_id, entry in GOLDEN_SYSTEMS.items():
        system = entry.system
        outcome = fm_feasibility(system)
        if isinstance(outcome, Feasible):
            result = FmResult(
                id=system_id,
                expected=entry.expected,
                verdict=outcome.verdict,
                witness={k: format_rational(v) for k, v in outcome.witness.items()},
            )
        else:
            result = FmResult(
                id=system_id,
                expected=entry.expected,
                verdict=outcome.verdict,
                certificate_ok=check_certificate(system, outcome.certificate),
                multipliers=[format_rational(m) for m in outcome.certificate.multipliers],
            )
        logger.info("%s: %s", system_id, result.verdict.value)
        results.append(result)
    return results


def _transcription_notes(catalog: Catalog) -> list[Discrepancy]:
    notes: list[Discrepancy] = []
    gimel43 = family(catalog, 43)
    notes.append(
        Discrepancy(
            kind="transcription",
            subject="ℷ=43",
            message="printed weights (2,3,5,9) sum to 19, not 20; the catalog entry is used",
            data={"weights": list(gimel43.weights), "degree": gimel43.degree},
        )
    )

    gimel6 = family(catalog, 6)
    quadratic = next(
        tag
        for point in gimel6.points
        for tag in point.involutions
        if tag.kind is InvolutionKind.QUADRATIC
    )
    count = contracted_curves(gimel6.ws, quadratic, CurveVariant.QUADRATIC)
    notes.append(
        Discrepancy(
            kind="transcription",
            subject="quadratic contracted-curve count",
            message="the printed general formula does not give the 48 curves stated for ℷ=6; "
            "d(d - r)/(a_k a_l) is used",
            data={"gimel": 6, "curves": format_rational(count)},
        )
    )

    gimel18 = family(catalog, 18)
    centre = max(gimel18.points, key=lambda p: p.qtype.r)
    notes.append(
        Discrepancy(
            kind="transcription",
            subject="ℷ=18",
            message="second blow-up weights quoted as (1,1,3); the child point is 1/3(1,1,2)",
            data={"children": [str(c) for c in blowup_children(centre.qtype)]},
        )
    )
    notes.append(
        Discrepancy(
            kind="transcription",
            subject="ℷ=38",
            message="the term (mu - n/7) at a centre of order 8 has no arithmetic source "
            "and is not encoded",
        )
    )
    return notes


def _claim_discrepancies(result: ClaimResult) -> list[Discrepancy]:
    if result.status is ClaimStatus.ANOMALY_MATCH:
        diff = sorted(set(result.missing) | set(result.extra))
        return [
            Discrepancy(
                kind="anomaly",
                subject=result.id,
                message=f"differs from the stated set at {diff}, each a known anomaly",
                data={"anomalies": {str(g): result.anomalies[g] for g in diff}},
            )
        ]
    if result.status is ClaimStatus.INFORMATIONAL:
        return [
            Discrepancy(
                kind="informational",
                subject=result.id,
                message=result.note,
                data={"missing": result.missing, "extra": result.extra},
            )
        ]
    if result.soft:
        stated = result.expected_count
        return [
            Discrepancy(
                kind="soft-claim",
                subject=result.id,
                message=f"{len(result.computed)} families computed, {stated} stated "
                f"({result.status.value})",
                data={
                    "computed": result.computed,
                    "count": len(result.computed),
                    "stated_count": stated,
                    "note": result.note,
                },
            )
        ]
    return []


def verify_all(catalog: Catalog) -> VerificationReport:
    """Evaluate every claim and golden system against the catalog.

    The overall status is the worst status over claims that are not soft.
    Golden-system verdicts that differ from the stated outcome become
    discrepancy records and leave the status alone.
    """
    claims = [evaluate(claim, catalog) for claim in CLAIMS.values()]
    fm = run_golden_systems()

    discrepancies: list[Discrepancy] = []
    for result in claims:
        discrepancies.extend(_claim_discrepancies(result))
    for outcome in fm:
        if outcome.verdict is not outcome.expected:
            logger.warning(
                "%s decided %s, stated %s",
                outcome.id,
                outcome.verdict.value,
                outcome.expected.value,
            )
            discrepancies.append(
                Discrepancy(
                    kind="fm-verdict",
                    subject=outcome.id,
                    message=f"decided {outcome.verdict.value}, stated {outcome.expected.value}",
                    data={"witness": outcome.witness or {}},
                )
            )
    discrepancies.extend(_transcription_notes(catalog))

    status = worst_status([r.status for r in claims if not r.soft])
    if status is ClaimStatus.MISMATCH:
        logger.warning("Verification failed: %s", [r.id for r in claims if r.status is status])
    return VerificationReport(
        status=status,
        catalog_digest=digest_text(catalog_to_json(catalog)),
        claims=claims,
        fm=fm,
        discrepancies=discrepancies,
    )


__all__ = [
    "FmResult",
    "Discrepancy",
    "VerificationReport",
    "run_golden_systems",
    "verify_all",
]
