"""Singularity baskets of general weighted hypersurfaces.

Singular points of a general quasismooth member sit at coordinate vertices and
along coordinate edges. Each is a cyclic quotient, normalized here to the
terminal form ``1/r(1, a, r-a)`` with ``a <= r - a``.
"""

from __future__ import annotations

import logging
import math
import re
from collections.abc import Iterator
from dataclasses import dataclass
from enum import Enum
from itertools import combinations
from typing import Any, Literal

from fanocalc.weighted_space import WeightSystem, monomials

logger = logging.getLogger(__name__)

_QTYPE_RE = re.compile(r"^1/(\d+)\(1,(\d+),(\d+)\)$")


class Defect(str, Enum):
    """Tagged reasons a point or weight system is rejected."""

    NOT_ISOLATED = "NotIsolated"
    NOT_TERMINAL = "NotTerminal"
    NOT_ON_X = "NotOnX"
    NOT_QUASISMOOTH = "NotQuasismooth"
    EDGE_CONTAINED = "EdgeContained"
    TRIVIAL_STABILIZER = "TrivialStabilizer"


@dataclass(frozen=True, order=True)
class QuotientType:
    """
    A terminal cyclic quotient singularity ``1/r(1, a, r-a)``.

    Attributes:
        r: Group order, at least 2
        a: Canonical representative with ``1 <= a <= r - a`` and ``gcd(a, r) = 1``
    """

    r: int
    a: int

    def __post_init__(self) -> None:
        if self.r < 2:
            raise ValueError(f"Quotient order must be at least 2, got {self.r}")
        if not 1 <= self.a <= self.r - self.a:
            raise ValueError(f"Need 1 <= a <= r - a, got r={self.r}, a={self.a}")
        if math.gcd(self.a, self.r) != 1:
            raise ValueError(f"a={self.a} is not coprime to r={self.r}")

    @property
    def weights(self) -> tuple[int, int, int]:
        return (1, self.a, self.r - self.a)

    def __str__(self) -> str:
        return f"1/{self.r}(1,{self.a},{self.r - self.a})"

    @classmethod
    def parse(cls, text: str) -> QuotientType:
        """Parse the ``1/r(1,a,r-a)`` rendering."""
        match = _QTYPE_RE.match(text.replace(" ", ""))
        if match is None:
            raise ValueError(f"Invalid quotient type '{text}'")
        r, a, b = (int(g) for g in match.groups())
        if a + b != r:
            raise ValueError(f"Weights of '{text}' do not sum to {r}")
        return cls(r, a)

    def to_dict(self) -> dict[str, int]:
        return {"r": self.r, "a": self.a}

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> QuotientType:
        return cls(int(data["r"]), int(data["a"]))


@dataclass(frozen=True)
class Locus:
    """Where a basket entry lives: a coordinate vertex or the interior of an edge."""

    kind: Literal["vertex", "edge"]
    indices: tuple[int, ...]

    def __post_init__(self) -> None:
        expected = 1 if self.kind == "vertex" else 2
        if self.kind not in ("vertex", "edge") or len(self.indices) != expected:
            raise ValueError(f"Invalid locus {self.kind}:{self.indices}")
        if any(not 1 <= i <= 4 for i in self.indices):
            raise ValueError(f"Locus indices must lie in 1..4: {self.indices}")
        if self.kind == "edge" and self.indices[0] >= self.indices[1]:
            raise ValueError(f"Edge indices must be increasing: {self.indices}")

    @classmethod
    def vertex(cls, j: int) -> Locus:
        return cls("vertex", (j,))

    @classmethod
    def edge(cls, i: int, j: int) -> Locus:
        return cls("edge", (i, j))

    def sort_key(self) -> tuple[int, tuple[int, ...]]:
        return (0 if self.kind == "vertex" else 1, self.indices)

    def __str__(self) -> str:
        return f"{self.kind}:{','.join(str(i) for i in self.indices)}"

    @classmethod
    def parse(cls, text: str) -> Locus:
        """Parse ``vertex:j`` or ``edge:i,j``."""
        kind, _, rest = text.partition(":")
        try:
            indices = tuple(int(part) for part in rest.split(","))
        except ValueError as exc:
            raise ValueError(f"Invalid locus '{text}'") from exc
        if kind == "vertex":
            return cls("vertex", indices)
        if kind == "edge":
            return cls("edge", indices)
        raise ValueError(f"Invalid locus '{text}'")


@dataclass(frozen=True)
class BasketEntry:
    """``count`` points of type ``qtype`` located at ``locus``."""

    qtype: QuotientType
    count: int
    locus: Locus

    def __post_init__(self) -> None:
        if self.count < 1:
            raise ValueError(f"Basket entry count must be positive, got {self.count}")
        if self.locus.kind == "vertex" and self.count != 1:
            raise ValueError("Vertex entries carry exactly one point")

    def sort_key(self) -> tuple[int, int, tuple[int, tuple[int, ...]]]:
        return (self.qtype.r, self.qtype.a, self.locus.sort_key())

    def render(self) -> str:
        return f"{self.count} × {self.qtype}"

    def to_dict(self) -> dict[str, Any]:
        return {
            "r": self.qtype.r,
            "a": self.qtype.a,
            "count": self.count,
            "locus": str(self.locus),
        }

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> BasketEntry:
        return cls(
            qtype=QuotientType.from_dict(data),
            count=int(data["count"]),
            locus=Locus.parse(str(data["locus"])),
        )


@dataclass(frozen=True)
class Basket:
    """The singular points of the general member, sorted by ``(r, a, locus)``."""

    entries: tuple[BasketEntry, ...] = ()

    def __post_init__(self) -> None:
        loci = [entry.locus for entry in self.entries]
        if len(set(loci)) != len(loci):
            raise ValueError("Basket loci must be pairwise distinct")
        if list(self.entries) != sorted(self.entries, key=BasketEntry.sort_key):
            raise ValueError("Basket entries must be sorted by (r, a, locus)")

    def __iter__(self) -> Iterator[BasketEntry]:
        return iter(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    @property
    def point_count(self) -> int:
        return sum(entry.count for entry in self.entries)

    def multiset(self) -> dict[QuotientType, int]:
        """Point counts per quotient type, loci forgotten."""
        counts: dict[QuotientType, int] = {}
        for entry in self.entries:
            counts[entry.qtype] = counts.get(entry.qtype, 0) + entry.count
        return counts

    def render(self) -> str:
        """Semicolon-joined ``count*1/r(1,a,r-a)`` as used in CSV exports."""
        return ";".join(f"{e.count}*{e.qtype}" for e in self.entries)


def normalize_quotient(r: int, transverse_weights: tuple[int, int, int]) -> QuotientType | Defect:
    """Bring a cyclic quotient ``1/r(w1, w2, w3)`` to terminal normal form.

    Args:
        r: Group order (at least 2).
        transverse_weights: The three weights acting on the local coordinates.

    Returns:
        ``QuotientType(r, min(a, r - a))`` when some coordinate can be scaled to
        1 with the other two residues summing to 0 mod r; ``Defect.NOT_ISOLATED``
        when a weight shares a factor with ``r``; ``Defect.NOT_TERMINAL`` otherwise.
    """
    if r < 2:
        raise ValueError(f"Quotient order must be at least 2, got {r}")
    residues = [w % r for w in transverse_weights]
    if any(math.gcd(w, r) != 1 for w in residues):
        return Defect.NOT_ISOLATED
    for c, weight in enumerate(residues):
        inverse = pow(weight, -1, r)
        others = [(w * inverse) % r for k, w in enumerate(residues) if k != c]
        if (others[0] + others[1]) % r == 0:
            a = others[0]
            return QuotientType(r, min(a, r - a))
    return Defect.NOT_TERMINAL


def vertex_point(ws: WeightSystem, j: int) -> BasketEntry | Defect:
    """Analyse the coordinate vertex ``P_j`` (``j`` in 1..4).

    Returns ``Defect.NOT_ON_X`` when ``x_j^m`` has degree ``d``. Otherwise the
    smallest ``k`` with a monomial ``x_j^m x_k`` of degree ``d`` is the tangent
    coordinate and the type is read off the remaining three weights.
    """
    if not 1 <= j <= 4:
        raise ValueError(f"Vertex index must lie in 1..4, got {j}")
    ambient = ws.ambient
    d = ws.degree
    r = ambient[j]
    if r == 1:
        return Defect.TRIVIAL_STABILIZER
    if d % r == 0:
        return Defect.NOT_ON_X
    tangent = next(
        (k for k in range(5) if k != j and d - ambient[k] > 0 and (d - ambient[k]) % r == 0),
        None,
    )
    if tangent is None:
        return Defect.NOT_QUASISMOOTH
    a, b, c = (ambient[i] for i in range(5) if i not in (j, tangent))
    qtype = normalize_quotient(r, (a, b, c))
    if isinstance(qtype, Defect):
        return qtype
    return BasketEntry(qtype=qtype, count=1, locus=Locus.vertex(j))


def edge_points(ws: WeightSystem, i: int, j: int) -> BasketEntry | Defect:
    """Analyse the interior of the coordinate edge ``P_i P_j`` (``1 <= i < j <= 4``)."""
    if not 1 <= i < j <= 4:
        raise ValueError(f"Edge indices must satisfy 1 <= i < j <= 4, got ({i}, {j})")
    ambient = ws.ambient
    h = math.gcd(ambient[i], ambient[j])
    if h == 1:
        return Defect.TRIVIAL_STABILIZER
    solutions = monomials([ambient[i], ambient[j]], ws.degree)
    if not solutions:
        return Defect.EDGE_CONTAINED
    count = len(solutions) - 1
    if count == 0:
        return Defect.NOT_ON_X
    others = tuple(ambient[k] for k in range(5) if k not in (i, j))
    qtype = normalize_quotient(h, (others[0], others[1], others[2]))
    if isinstance(qtype, Defect):
        return qtype
    return BasketEntry(qtype=qtype, count=count, locus=Locus.edge(i, j))


def basket(ws: WeightSystem) -> Basket | Defect:
    """Collect every vertex and edge point of the general member.

    Returns ``Defect.NOT_TERMINAL`` as soon as any point fails, whatever its
    own tag, or when three weights share a common factor. The specific tag is
    logged at DEBUG.
    """
    for triple in combinations(ws.weights, 3):
        if math.gcd(*triple) > 1:
            return Defect.NOT_TERMINAL

    entries: list[BasketEntry] = []
    for j in range(1, 5):
        outcome = vertex_point(ws, j)
        if isinstance(outcome, BasketEntry):
            entries.append(outcome)
        elif outcome not in (Defect.NOT_ON_X, Defect.TRIVIAL_STABILIZER):
            logger.debug("%s rejected at vertex %d: %s", ws, j, outcome.value)
            return Defect.NOT_TERMINAL

    for i, j in combinations(range(1, 5), 2):
        edge = edge_points(ws, i, j)
        if isinstance(edge, BasketEntry):
            entries.append(edge)
        elif edge in (Defect.EDGE_CONTAINED, Defect.NOT_TERMINAL, Defect.NOT_ISOLATED):
            logger.debug("%s rejected on edge %d,%d: %s", ws, i, j, edge.value)
            return Defect.NOT_TERMINAL

    return Basket(tuple(sorted(entries, key=BasketEntry.sort_key)))


def is_terminal_general(ws: WeightSystem) -> bool:
    """True iff :func:`basket` returns a Basket."""
    return isinstance(basket(ws), Basket)


__all__ = [
    "Defect",
    "QuotientType",
    "Locus",
    "BasketEntry",
    "Basket",
    "normalize_quotient",
    "vertex_point",
    "edge_points",
    "basket",
    "is_terminal_general",
]
