"""Enumeration of the 95 families and the catalog built from them."""

from __future__ import annotations

import logging
import time
from collections.abc import Iterator
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Any

from fanocalc.blowup import PointAnalysis, analyse_point
from fanocalc.core.exceptions import (
    AnchorMismatchError,
    CountMismatchError,
    OutOfRangeError,
    ValidationError,
)
from fanocalc.core.rational import format_rational, parse_rational
from fanocalc.singularities import Basket, BasketEntry, basket
from fanocalc.weighted_space import (
    WeightSystem,
    degree_and_kx3,
    is_quasismooth_general,
    is_well_formed,
)

logger = logging.getLogger(__name__)

DEFAULT_MAX_WEIGHT = 100
MIN_MAX_WEIGHT = 40
EXPECTED_FAMILY_COUNT = 95

# Ordinals fixed by the literature; the (d, weights) ordering must reproduce them.
ANCHORS: dict[int, tuple[int, int, int, int]] = {
    6: (1, 1, 2, 4),
    7: (1, 2, 2, 3),
    14: (1, 1, 4, 6),
    18: (2, 2, 3, 5),
    23: (2, 3, 4, 5),
    36: (1, 4, 6, 7),
    38: (2, 3, 5, 8),
    43: (2, 4, 5, 9),
    47: (1, 5, 7, 8),
    58: (3, 4, 7, 10),
    82: (1, 5, 12, 18),
}

CSV_COLUMNS = ["gimel", "a1", "a2", "a3", "a4", "degree", "kx3", "basket", "involutions"]


@dataclass(frozen=True)
class FamilyRecord:
    """
    One family of the catalog.

    Attributes:
        gimel: 1-based ordinal under the ``(d, weights)`` ordering
        ws: Weight system
        kx3: Anticanonical degree ``d / (a1 a2 a3 a4)``
        basket: Singularities of the general member
        points: Blow-up analysis of each basket entry, same order as the basket
    """

    gimel: int
    ws: WeightSystem
    kx3: Fraction
    basket: Basket
    points: tuple[PointAnalysis, ...]

    def __post_init__(self) -> None:
        if self.gimel < 1:
            raise ValueError(f"Ordinal must be positive, got {self.gimel}")
        if self.kx3 != degree_and_kx3(self.ws)[1]:
            raise ValueError(f"kx3 {self.kx3} does not match {self.ws}")
        if tuple(p.entry for p in self.points) != self.basket.entries:
            raise ValueError("Point analyses must follow the basket order")

    @property
    def degree(self) -> int:
        return self.ws.degree

    @property
    def weights(self) -> tuple[int, int, int, int]:
        return self.ws.weights

    def involution_summary(self) -> str:
        """Semicolon-joined ``<qtype>:<Kind>(i,j)`` tags, empty when there are none.

        Covering tags read ``<Kind>(i,j,covering)``.
        """
        parts = [
            f"{p.qtype}:{tag.kind.value}({tag.i},{tag.j}{',covering' if tag.covering else ''})"
            for p in self.points
            for tag in p.involutions
        ]
        return ";".join(parts)

    def to_dict(self) -> dict[str, Any]:
        """Convert FamilyRecord to dictionary."""
        return {
            "gimel": self.gimel,
            "weights": list(self.ws.weights),
            "degree": self.degree,
            "kx3": format_rational(self.kx3),
            "basket": [entry.to_dict() for entry in self.basket],
            "points": [point.to_dict() for point in self.points],
        }

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> FamilyRecord:
        """Create FamilyRecord from dictionary."""
        try:
            ws = WeightSystem.from_dict(data)
            return cls(
                gimel=int(data["gimel"]),
                ws=ws,
                kx3=parse_rational(str(data["kx3"])),
                basket=Basket(tuple(BasketEntry.from_dict(e) for e in data["basket"])),
                points=tuple(PointAnalysis.from_dict(p) for p in data["points"]),
            )
        except (KeyError, TypeError, ValueError) as exc:
            raise ValidationError(f"Invalid family record: {exc}") from exc

    def csv_row(self) -> list[str]:
        a1, a2, a3, a4 = self.ws.weights
        return [
            str(self.gimel),
            str(a1),
            str(a2),
            str(a3),
            str(a4),
            str(self.degree),
            format_rational(self.kx3),
            self.basket.render(),
            self.involution_summary(),
        ]

    def render(self) -> str:
        """Multi-line human-readable description; integral rationals print without ``/1``."""
        lines = [
            f"ℷ={self.gimel}  P(1,{','.join(str(w) for w in self.ws.weights)})  "
            f"degree {self.degree}  -K^3 = {self.kx3}"
        ]
        for point in self.points:
            tags = ", ".join(str(tag) for tag in point.involutions) or "none"
            children = ", ".join(str(c) for c in point.children) or "none"
            lines.append(
                f"  {point.entry.render()} at {point.entry.locus}: "
                f"ku3 = {point.ku3} ({point.sign.value}); "
                f"involutions: {tags}; children: {children}"
            )
            for tag, bound in zip(point.involutions, point.bounds):
                shown = ", ".join(
                    f"{name}={value}"
                    for name, value in (
                        ("upper_quadratic", bound.upper_quadratic),
                        ("upper_cap", bound.upper_cap),
                        ("lower_elliptic", bound.lower_elliptic),
                    )
                    if value is not None
                )
                lines.append(f"    mu bounds for {tag}: {shown}")
        return "\n".join(lines)


@dataclass(frozen=True)
class Catalog:
    """All families, ordered by ordinal."""

    records: tuple[FamilyRecord, ...]

    def __post_init__(self) -> None:
        ordinals = [record.gimel for record in self.records]
        if ordinals != list(range(1, len(self.records) + 1)):
            raise ValueError("Catalog ordinals must run 1..N consecutively")

    def __iter__(self) -> Iterator[FamilyRecord]:
        return iter(self.records)

    def __len__(self) -> int:
        return len(self.records)

    def by_weights(self, weights: tuple[int, int, int, int]) -> FamilyRecord | None:
        return next((r for r in self.records if r.ws.weights == weights), None)


def build_record(gimel: int, ws: WeightSystem) -> FamilyRecord:
    """Compute every invariant of a weight system already known to qualify."""
    outcome = basket(ws)
    if not isinstance(outcome, Basket):
        raise ValidationError(f"{ws} is not terminal: {outcome.value}")
    _, kx3 = degree_and_kx3(ws)
    points = tuple(analyse_point(ws, kx3, entry) for entry in outcome)
    return FamilyRecord(gimel=gimel, ws=ws, kx3=kx3, basket=outcome, points=points)


def _divisors(n: int) -> set[int]:
    found: set[int] = set()
    k = 1
    while k * k <= n:
        if n % k == 0:
            found.update((k, n // k))
        k += 1
    return found


def _vertex_prefilter(ambient: tuple[int, ...], d: int, j: int) -> bool:
    # The singleton subset {x_j} of the quasismooth test.
    r = ambient[j]
    return d % r == 0 or any(
        k != j and d - w > 0 and (d - w) % r == 0 for k, w in enumerate(ambient)
    )


def _candidates_for(a1: int, max_weight: int) -> list[WeightSystem]:
    """All qualifying weight systems whose smallest weight is ``a1``."""
    found: list[WeightSystem] = []
    for a2 in range(a1, max_weight + 1):
        for a3 in range(a2, max_weight + 1):
            s = a1 + a2 + a3
            # x4 must appear in a degree-d monomial as x4^m or x4^m x_k.
            pool: set[int] = set()
            for base in (s, s - 1, s - a1, s - a2, s - a3):
                if base > 0:
                    pool |= _divisors(base)
            for a4 in sorted(pool):
                if not a3 <= a4 <= min(max_weight, s):
                    continue
                ambient, d = (1, a1, a2, a3, a4), s + a4
                if not all(_vertex_prefilter(ambient, d, j) for j in range(1, 5)):
                    continue
                ws = WeightSystem((a1, a2, a3, a4))
                if not is_well_formed(ws):
                    continue
                if not is_quasismooth_general(ws):
                    logger.debug("%s rejected: not quasismooth", ws)
                    continue
                if not isinstance(basket(ws), Basket):
                    continue
                found.append(ws)
    return found


def _check_anchors(systems: list[WeightSystem]) -> None:
    mismatches = []
    for gimel, weights in sorted(ANCHORS.items()):
        actual = systems[gimel - 1].weights if gimel <= len(systems) else None
        if actual != weights:
            mismatches.append(f"ℷ={gimel} expected {weights}, got {actual}")
    if mismatches:
        raise AnchorMismatchError(mismatches)


def enumerate_families(
    max_weight: int = DEFAULT_MAX_WEIGHT, workers: int = 1, strict: bool = True
) -> Catalog:
    """Enumerate every terminal quasismooth anticanonical hypersurface family.

    Args:
        max_weight: Upper bound on each weight; at least ``MIN_MAX_WEIGHT``.
        workers: Threads used for candidate generation, one task per ``a1``.
        strict: Raise on a count or anchor mismatch instead of logging it.

    Returns:
        The catalog ordered by ``(d, weights)`` with ordinals assigned.

    Raises:
        ValueError: If ``max_weight`` or ``workers`` is out of range.
        CountMismatchError: If the family count is not 95 (strict mode).
        AnchorMismatchError: If a known ordinal does not match (strict mode).
    """
    if max_weight < MIN_MAX_WEIGHT:
        raise ValueError(f"max_weight must be at least {MIN_MAX_WEIGHT}, got {max_weight}")
    if workers < 1:
        raise ValueError(f"workers must be positive, got {workers}")

    started = time.perf_counter()
    smallest = range(1, max_weight + 1)
    if workers == 1:
        batches = [_candidates_for(a1, max_weight) for a1 in smallest]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            batches = list(pool.map(lambda a1: _candidates_for(a1, max_weight), smallest))

    systems = sorted(
        (ws for batch in batches for ws in batch), key=lambda ws: (ws.degree, ws.weights)
    )
    logger.info(
        "Enumerated %d families with max_weight=%d in %.2fs",
        len(systems),
        max_weight,
        time.perf_counter() - started,
    )

    if len(systems) != EXPECTED_FAMILY_COUNT:
        if strict:
            raise CountMismatchError(len(systems), EXPECTED_FAMILY_COUNT)
        logger.warning("Found %d families, expected %d", len(systems), EXPECTED_FAMILY_COUNT)
    try:
        _check_anchors(systems)
    except AnchorMismatchError as exc:
        if strict:
            raise
        logger.warning("%s", exc)

    return Catalog(tuple(build_record(g, ws) for g, ws in enumerate(systems, start=1)))


def family(catalog: Catalog, gimel: int) -> FamilyRecord:
    """Return the record with ordinal ``gimel``.

    Raises:
        OutOfRangeError: If ``gimel`` is outside ``1..len(catalog)``.
    """
    if not 1 <= gimel <= len(catalog):
        raise OutOfRangeError(f"Ordinal {gimel} outside 1..{len(catalog)}")
    return catalog.records[gimel - 1]


__all__ = [
    "DEFAULT_MAX_WEIGHT",
    "MIN_MAX_WEIGHT",
    "EXPECTED_FAMILY_COUNT",
    "ANCHORS",
    "CSV_COLUMNS",
    "FamilyRecord",
    "Catalog",
    "build_record",
    "enumerate_families",
    "family",
]
