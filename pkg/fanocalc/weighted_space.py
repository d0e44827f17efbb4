"""Weight systems, monomials and the quasismoothness test.

A hypersurface of degree ``d`` in ``P(1, a1, a2, a3, a4)`` is described by its
four nontrivial weights. Coordinates are indexed ``0..4``; index ``0`` is the
implicit coordinate of weight 1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Any

ExponentVector = tuple[int, ...]


@dataclass(frozen=True, order=True)
class WeightSystem:
    """
    Four nontrivial weights of an anticanonically embedded hypersurface.

    Attributes:
        weights: ``(a1, a2, a3, a4)`` in ascending order

    Examples:
        >>> ws = WeightSystem((1, 2, 2, 3))
        >>> ws.degree
        8
        >>> ws.ambient
        (1, 1, 2, 2, 3)
    """

    weights: tuple[int, int, int, int]

    def __post_init__(self) -> None:
        if len(self.weights) != 4:
            raise ValueError(f"Expected four weights, got {len(self.weights)}")
        if any(not isinstance(w, int) or w < 1 for w in self.weights):
            raise ValueError(f"Weights must be positive integers: {self.weights}")
        if list(self.weights) != sorted(self.weights):
            raise ValueError(f"Weights must be ascending: {self.weights}")

    @property
    def degree(self) -> int:
        """Degree ``d = a1 + a2 + a3 + a4``."""
        return sum(self.weights)

    @property
    def ambient(self) -> tuple[int, int, int, int, int]:
        """All five weights, the implicit 1 first."""
        a1, a2, a3, a4 = self.weights
        return (1, a1, a2, a3, a4)

    def weight(self, index: int) -> int:
        """Weight of coordinate ``index`` (0..4)."""
        return self.ambient[index]

    def __str__(self) -> str:
        return f"({','.join(str(w) for w in self.weights)};{self.degree})"

    def to_dict(self) -> dict[str, Any]:
        """Convert WeightSystem to dictionary."""
        return {"weights": list(self.weights), "degree": self.degree}

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> WeightSystem:
        """Create WeightSystem from dictionary."""
        a1, a2, a3, a4 = (int(w) for w in data["weights"])
        ws = cls((a1, a2, a3, a4))
        if "degree" in data and int(data["degree"]) != ws.degree:
            raise ValueError(f"Degree {data['degree']} does not match weights {ws.weights}")
        return ws


def degree_and_kx3(ws: WeightSystem) -> tuple[int, Fraction]:
    """Return ``d`` and the anticanonical degree ``-K_X^3 = d / (a1 a2 a3 a4)``."""
    d = ws.degree
    return d, Fraction(d, math.prod(ws.weights))


def monomials(weights_subset: list[int] | tuple[int, ...], d: int) -> list[ExponentVector]:
    """List all exponent vectors of weighted degree ``d`` over the given weights.

    Args:
        weights_subset: Positive weights of the chosen coordinates.
        d: Target degree.

    Returns:
        Every nonnegative solution of ``sum(e_k * w_k) == d`` in ascending
        lexicographic order. Empty when there is none.

    Raises:
        ValueError: If the subset is empty or holds a nonpositive weight.
    """
    weights = tuple(weights_subset)
    if not weights:
        raise ValueError("Weight subset must be nonempty")
    if any(w < 1 for w in weights):
        raise ValueError(f"Weights must be positive: {weights}")
    if d < 0:
        return []

    result: list[ExponentVector] = []

    def extend(prefix: tuple[int, ...], position: int, remaining: int) -> None:
        w = weights[position]
        if position == len(weights) - 1:
            if remaining % w == 0:
                result.append(prefix + (remaining // w,))
            return
        for exponent in range(remaining // w + 1):
            extend(prefix + (exponent,), position + 1, remaining - exponent * w)

    extend((), 0, d)
    return result


@lru_cache(maxsize=1 << 16)
def _representable(weights: tuple[int, ...], target: int) -> bool:
    if target == 0:
        return True
    if not weights or target < 0:
        return False
    if weights[-1] == 1:
        return True
    if target % math.gcd(*weights) != 0:
        return False
    head, tail = weights[0], weights[1:]
    return any(_representable(tail, target - k * head) for k in range(target // head + 1))


def has_monomial(weights_subset: list[int] | tuple[int, ...], d: int) -> bool:
    """Return True iff some monomial in the given weights has degree ``d``."""
    if d < 0:
        return False
    key = tuple(sorted(set(weights_subset), reverse=True))
    return _representable(key, d)


def is_well_formed(ws: WeightSystem) -> bool:
    """True iff ``gcd(a1, a2, a3, a4) == 1``.

    Every other four-element subset of the ambient weights contains the
    implicit 1, so this is the only condition left.
    """
    return math.gcd(*ws.weights) == 1


def is_double_cover(ws: WeightSystem) -> bool:
    """True iff ``d = 2 a4``, i.e. the equation contains ``w^2``."""
    return ws.degree == 2 * ws.weights[3]


def is_quasismooth_general(ws: WeightSystem) -> bool:
    """Decide quasismoothness of the general member of degree ``d``.

    For every nonempty coordinate subset ``I`` either a monomial of degree
    ``d`` in the variables of ``I`` exists, or at least ``|I|`` distinct
    coordinates ``e`` outside ``I`` admit a monomial ``(monomial in I) * x_e``
    of degree ``d``.
    """
    ambient = ws.ambient
    d = ws.degree
    indices = range(len(ambient))
    for size in range(1, len(ambient) + 1):
        for subset in combinations(indices, size):
            in_weights = [ambient[i] for i in subset]
            if has_monomial(in_weights, d):
                continue
            witnesses = sum(
                1
                for e in indices
                if e not in subset
                and d - ambient[e] > 0
                and has_monomial(in_weights, d - ambient[e])
            )
            if witnesses < size:
                return False
    return True


__all__ = [
    "ExponentVector",
    "WeightSystem",
    "degree_and_kx3",
    "monomials",
    "has_monomial",
    "is_well_formed",
    "is_double_cover",
    "is_quasismooth_general",
]
