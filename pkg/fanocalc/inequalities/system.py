"""Linear inequality systems over the rationals and their verdicts."""

from __future__ import annotations

from collections.abc import Mapping, Sequence
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Any

from fanocalc.core.rational import format_rational


class Relation(str, Enum):
    """Every constraint is normalized to ``lhs < rhs`` or ``lhs <= rhs``."""

    LT = "<"
    LE = "<="


class Verdict(str, Enum):
    FEASIBLE = "Feasible"
    INFEASIBLE = "Infeasible"


@dataclass(frozen=True)
class Constraint:
    """
    ``sum(coefficients[k] * x_k) relation rhs``.

    Attributes:
        coefficients: One rational per declared variable
        relation: Strict or non-strict upper bound
        rhs: Right-hand side constant
        note: Free-form provenance (e.g. ``displayed`` or ``context``)
    """

    coefficients: tuple[Fraction, ...]
    relation: Relation
    rhs: Fraction
    note: str = ""

    @property
    def strict(self) -> bool:
        return self.relation is Relation.LT

    def holds_at(self, point: Sequence[Fraction]) -> bool:
        value = sum((c * x for c, x in zip(self.coefficients, point)), Fraction(0))
        return value < self.rhs if self.strict else value <= self.rhs

    def render(self, variables: Sequence[str]) -> str:
        lhs = ""
        for c, name in zip(self.coefficients, variables):
            if c == 0:
                continue
            term = f"{format_rational(abs(c))}*{name}"
            if not lhs:
                lhs = term if c > 0 else f"-{term}"
            else:
                lhs += f" {'+' if c > 0 else '-'} {term}"
        return f"{lhs or '0'} {self.relation.value} {format_rational(self.rhs)}"


@dataclass(frozen=True)
class LinearSystem:
    """An ordered variable list and constraints over exactly those variables."""

    variables: tuple[str, ...]
    constraints: tuple[Constraint, ...] = field(default=())

    def __post_init__(self) -> None:
        if len(set(self.variables)) != len(self.variables):
            raise ValueError(f"Duplicate variable names in {self.variables}")
        for constraint in self.constraints:
            if len(constraint.coefficients) != len(self.variables):
                raise ValueError(
                    f"Constraint has {len(constraint.coefficients)} coefficients, "
                    f"expected {len(self.variables)}"
                )

    def __len__(self) -> int:
        return len(self.constraints)

    def point(self, assignment: Mapping[str, Fraction]) -> tuple[Fraction, ...]:
        return tuple(Fraction(assignment.get(name, 0)) for name in self.variables)

    def satisfied_by(self, assignment: Mapping[str, Fraction]) -> bool:
        """True iff every constraint holds at ``assignment`` (missing names read as 0)."""
        point = self.point(assignment)
        return all(constraint.holds_at(point) for constraint in self.constraints)

    def render(self) -> str:
        """Text form accepted by :func:`fanocalc.inequalities.parser.parse_system`."""
        lines = [f"vars: {', '.join(self.variables)}"]
        lines.extend(c.render(self.variables) for c in self.constraints)
        return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class InfeasibilityCertificate:
    """Multipliers, one per constraint, combining the system into a contradiction."""

    multipliers: tuple[Fraction, ...]

    def to_dict(self) -> dict[str, Any]:
        return {"multipliers": [format_rational(m) for m in self.multipliers]}


@dataclass(frozen=True)
class Feasible:
    witness: dict[str, Fraction]

    @property
    def verdict(self) -> Verdict:
        return Verdict.FEASIBLE

    def to_dict(self) -> dict[str, Any]:
        return {
            "verdict": self.verdict.value,
            "witness": {name: format_rational(v) for name, v in self.witness.items()},
        }


@dataclass(frozen=True)
class Infeasible:
    certificate: InfeasibilityCertificate

    @property
    def verdict(self) -> Verdict:
        return Verdict.INFEASIBLE

    def to_dict(self) -> dict[str, Any]:
        return {"verdict": self.verdict.value, **self.certificate.to_dict()}


FeasibilityResult = Feasible | Infeasible


__all__ = [
    "Relation",
    "Verdict",
    "Constraint",
    "LinearSystem",
    "InfeasibilityCertificate",
    "Feasible",
    "Infeasible",
    "FeasibilityResult",
]
