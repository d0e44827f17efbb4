"""Exact Fourier–Motzkin elimination with infeasibility certificates.

Each working row remembers the nonnegative combination of the original
constraints it came from, so a row with no variables left and an impossible
right-hand side is itself the certificate.
"""

from __future__ import annotations

import logging
from collections.abc import Sequence
from dataclasses import dataclass
from fractions import Fraction

from fanocalc.core.exceptions import DimensionMismatchError
from fanocalc.inequalities.system import (
    FeasibilityResult,
    Feasible,
    Infeasible,
    InfeasibilityCertificate,
    LinearSystem,
)

logger = logging.getLogger(__name__)

_ZERO = Fraction(0)


@dataclass(frozen=True)
class _Row:
    coefficients: tuple[Fraction, ...]
    strict: bool
    rhs: Fraction
    multipliers: tuple[Fraction, ...]

    def is_trivial(self) -> bool:
        return all(c == 0 for c in self.coefficients)

    def is_contradiction(self) -> bool:
        # 0 < rhs with rhs <= 0, or 0 <= rhs with rhs < 0
        return self.is_trivial() and (self.rhs < 0 or (self.strict and self.rhs == 0))

    def scaled(self, factor: Fraction) -> _Row:
        return _Row(
            tuple(c * factor for c in self.coefficients),
            self.strict,
            self.rhs * factor,
            tuple(m * factor for m in self.multipliers),
        )

    def normalized(self) -> _Row:
        lead = next((c for c in self.coefficients if c != 0), None)
        return self if lead is None else self.scaled(1 / abs(lead))


def _combine(upper: _Row, lower: _Row, k: int) -> _Row:
    # upper has a positive coefficient on x_k, lower a negative one
    left = upper.scaled(1 / upper.coefficients[k])
    right = lower.scaled(1 / -lower.coefficients[k])
    return _Row(
        tuple(a + b for a, b in zip(left.coefficients, right.coefficients)),
        upper.strict or lower.strict,
        left.rhs + right.rhs,
        tuple(a + b for a, b in zip(left.multipliers, right.multipliers)),
    )


def _tighter(candidate: _Row, current: _Row) -> bool:
    return candidate.rhs < current.rhs or (
        candidate.rhs == current.rhs and candidate.strict and not current.strict
    )


def _prune(rows: list[_Row]) -> list[_Row] | _Row:
    """Drop trivial rows, keep the tightest row per direction; return a contradiction row if any."""
    best: dict[tuple[Fraction, ...], _Row] = {}
    for row in rows:
        if row.is_contradiction():
            return row
        if row.is_trivial():
            continue
        row = row.normalized()
        current = best.get(row.coefficients)
        if current is None or _tighter(row, current):
            best[row.coefficients] = row
    return list(best.values())


def _resolve_order(system: LinearSystem, order: Sequence[str] | None) -> list[int]:
    if order is None:
        return list(range(len(system.variables)))
    if sorted(order) != sorted(system.variables):
        raise ValueError(f"Elimination order {list(order)} is not a permutation of the variables")
    return [system.variables.index(name) for name in order]


def _pick_value(
    lower: tuple[Fraction, bool] | None, upper: tuple[Fraction, bool] | None
) -> Fraction:
    def fits(x: Fraction) -> bool:
        if lower is not None and (x < lower[0] or (lower[1] and x == lower[0])):
            return False
        if upper is not None and (x > upper[0] or (upper[1] and x == upper[0])):
            return False
        return True

    candidates = [_ZERO]
    if lower is not None and not lower[1]:
        candidates.append(lower[0])
    if upper is not None and not upper[1]:
        candidates.append(upper[0])
    if lower is not None and upper is not None:
        candidates.append((lower[0] + upper[0]) / 2)
    if lower is not None:
        candidates.append(lower[0] + 1)
    if upper is not None:
        candidates.append(upper[0] - 1)
    for candidate in candidates:
        if fits(candidate):
            return candidate
    raise ArithmeticError(f"Empty interval during back-substitution: {lower} .. {upper}")


def _bounds(
    rows: list[_Row], k: int, values: dict[int, Fraction]
) -> tuple[tuple[Fraction, bool] | None, tuple[Fraction, bool] | None]:
    lower: tuple[Fraction, bool] | None = None
    upper: tuple[Fraction, bool] | None = None
    for row in rows:
        c = row.coefficients[k]
        if c == 0:
            continue
        rest = sum(
            (row.coefficients[m] * v for m, v in values.items() if m != k), _ZERO
        )
        bound = (row.rhs - rest) / c
        if c > 0:
            if upper is None or bound < upper[0] or (bound == upper[0] and row.strict):
                upper = (bound, row.strict)
        elif lower is None or bound > lower[0] or (bound == lower[0] and row.strict):
            lower = (bound, row.strict)
    return lower, upper


def fm_feasibility(system: LinearSystem, order: Sequence[str] | None = None) -> FeasibilityResult:
    """Decide a mixed strict/non-strict system exactly.

    Args:
        system: The inequality system.
        order: Variable names in elimination order; declared order by default.

    Returns:
        :class:`Feasible` with a rational witness, or :class:`Infeasible` with a
        certificate that passes :func:`check_certificate`.

    Raises:
        ValueError: If ``order`` is not a permutation of the variables.
    """
    elimination = _resolve_order(system, order)
    size = len(system.constraints)
    initial = [
        _Row(
            constraint.coefficients,
            constraint.strict,
            constraint.rhs,
            tuple(Fraction(int(i == n)) for i in range(size)),
        )
        for n, constraint in enumerate(system.constraints)
    ]

    pruned = _prune(initial)
    levels: list[tuple[int, list[_Row]]] = []
    for k in elimination:
        if isinstance(pruned, _Row):
            break
        rows = pruned
        levels.append((k, rows))
        upper = [row for row in rows if row.coefficients[k] > 0]
        lower = [row for row in rows if row.coefficients[k] < 0]
        untouched = [row for row in rows if row.coefficients[k] == 0]
        derived = untouched + [_combine(u, lo, k) for u in upper for lo in lower]
        pruned = _prune(derived)
        logger.debug(
            "Eliminated %s: %d rows -> %d",
            system.variables[k],
            len(rows),
            len(pruned) if isinstance(pruned, list) else 0,
        )

    if isinstance(pruned, _Row):
        return Infeasible(InfeasibilityCertificate(pruned.multipliers))

    values: dict[int, Fraction] = {}
    for k, rows in reversed(levels):
        lower_bound, upper_bound = _bounds(rows, k, values)
        values[k] = _pick_value(lower_bound, upper_bound)
    witness = {name: values.get(k, _ZERO) for k, name in enumerate(system.variables)}
    return Feasible(witness)


def check_certificate(system: LinearSystem, certificate: InfeasibilityCertificate) -> bool:
    """Replay a certificate against the system.

    Returns:
        True iff the multipliers are nonnegative, not all zero, cancel every
        variable, and leave ``0 < c`` with ``c <= 0`` or ``0 <= c`` with ``c < 0``.

    Raises:
        DimensionMismatchError: If the multiplier count differs from the constraint count.
    """
    multipliers = certificate.multipliers
    if len(multipliers) != len(system.constraints):
        raise DimensionMismatchError(
            f"Certificate has {len(multipliers)} multipliers for "
            f"{len(system.constraints)} constraints"
        )
    if any(m < 0 for m in multipliers) or all(m == 0 for m in multipliers):
        return False

    width = len(system.variables)
    combined = [_ZERO] * width
    rhs = _ZERO
    strict = False
    for m, constraint in zip(multipliers, system.constraints):
        if m == 0:
            continue
        for k in range(width):
            combined[k] += m * constraint.coefficients[k]
        rhs += m * constraint.rhs
        strict = strict or constraint.strict
    if any(c != 0 for c in combined):
        return False
    return rhs < 0 or (strict and rhs == 0)


__all__ = ["fm_feasibility", "check_certificate"]
