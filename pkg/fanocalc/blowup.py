"""Closed-form arithmetic of Kawamata blow-ups at terminal quotient points.

All quantities are exact rationals with the multiplicity ``n`` normalized to 1.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from itertools import combinations_with_replacement
from typing import Any

from fanocalc.core.exceptions import KindMismatchError, NotApplicableError
from fanocalc.core.rational import format_rational, parse_rational
from fanocalc.singularities import BasketEntry, QuotientType, normalize_quotient
from fanocalc.weighted_space import WeightSystem, degree_and_kx3, is_double_cover

logger = logging.getLogger(__name__)


class Sign(str, Enum):
    NEG = "Neg"
    ZERO = "Zero"
    POS = "Pos"


class InvolutionKind(str, Enum):
    QUADRATIC = "Quadratic"
    ELLIPTIC = "Elliptic"


class CurveVariant(str, Enum):
    """Which contracted-curve count to evaluate."""

    ELLIPTIC_A = "EllipticA"
    ELLIPTIC_B = "EllipticB"
    QUADRATIC = "Quadratic"


class EpsilonVariant(str, Enum):
    A = "A"
    B = "B"


@dataclass(frozen=True, order=True)
class Involution:
    """
    An involution tag at a singular point.

    Attributes:
        kind: Quadratic when ``d = 2r + a_j``, Elliptic when ``d = 3r + a_j``
        i: Centre coordinate index (1..4), its weight equals the point order
        j: The companion coordinate index (1..4, different from ``i``)
        covering: Elliptic tag on a double cover; the map is the biregular
            covering involution ``w -> -w`` and gives no new birational model
    """

    kind: InvolutionKind
    i: int
    j: int
    covering: bool = False

    def __post_init__(self) -> None:
        if not (1 <= self.i <= 4 and 1 <= self.j <= 4) or self.i == self.j:
            raise ValueError(f"Invalid involution indices i={self.i}, j={self.j}")

    def to_dict(self) -> dict[str, Any]:
        return {"kind": self.kind.value, "i": self.i, "j": self.j, "covering": self.covering}

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> Involution:
        return cls(
            kind=InvolutionKind(data["kind"]),
            i=int(data["i"]),
            j=int(data["j"]),
            covering=bool(data.get("covering", False)),
        )

    def __str__(self) -> str:
        suffix = ", covering" if self.covering else ""
        return f"{self.kind.value}(i={self.i}, j={self.j}{suffix})"


@dataclass(frozen=True)
class MuBounds:
    """Bounds on the multiplicity ``mu`` at a point, normalized to ``n = 1``."""

    upper_quadratic: Fraction | None = None
    upper_cap: Fraction | None = None
    lower_elliptic: Fraction | None = None

    def __post_init__(self) -> None:
        if (
            self.upper_quadratic is not None
            and self.upper_cap is not None
            and self.upper_quadratic > self.upper_cap
        ):
            raise ValueError(
                f"upper_quadratic {self.upper_quadratic} exceeds upper_cap {self.upper_cap}"
            )

    def to_dict(self) -> dict[str, str | None]:
        return {
            "upper_quadratic": _opt_format(self.upper_quadratic),
            "upper_cap": _opt_format(self.upper_cap),
            "lower_elliptic": _opt_format(self.lower_elliptic),
        }

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> MuBounds:
        return cls(
            upper_quadratic=_opt_parse(data.get("upper_quadratic")),
            upper_cap=_opt_parse(data.get("upper_cap")),
            lower_elliptic=_opt_parse(data.get("lower_elliptic")),
        )


@dataclass(frozen=True)
class PointAnalysis:
    """
    Everything computed for one basket entry of a family.

    Attributes:
        entry: The basket entry (type, count and locus)
        ku3: ``-K_U^3`` after the Kawamata blow-up of one point of the entry
        sign: Sign of ``ku3``
        involutions: Involution tags in ``(kind, i, j)`` order
        children: Singular points of the blow-up on the exceptional divisor
        bounds: One :class:`MuBounds` per involution tag, same order
    """

    entry: BasketEntry
    ku3: Fraction
    sign: Sign
    involutions: tuple[Involution, ...] = ()
    children: tuple[QuotientType, ...] = ()
    bounds: tuple[MuBounds, ...] = field(default=())

    def __post_init__(self) -> None:
        if self.sign is not sign_class(self.ku3):
            raise ValueError(f"Sign {self.sign.value} disagrees with ku3 = {self.ku3}")
        if len(self.bounds) != len(self.involutions):
            raise ValueError("Each involution tag needs exactly one MuBounds")

    @property
    def qtype(self) -> QuotientType:
        return self.entry.qtype

    @property
    def birational(self) -> tuple[Involution, ...]:
        """Tags that give a new birational map (covering tags dropped)."""
        return tuple(tag for tag in self.involutions if not tag.covering)

    def has_kind(self, kind: InvolutionKind) -> bool:
        """Whether some birational tag has the given kind."""
        return any(tag.kind is kind for tag in self.birational)

    def to_dict(self) -> dict[str, Any]:
        result = self.entry.to_dict()
        result.update(
            {
                "ku3": format_rational(self.ku3),
                "sign": self.sign.value,
                "involutions": [tag.to_dict() for tag in self.involutions],
                "children": [str(child) for child in self.children],
                "mu_bounds": [bound.to_dict() for bound in self.bounds],
            }
        )
        return result

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> PointAnalysis:
        return cls(
            entry=BasketEntry.from_dict(data),
            ku3=parse_rational(str(data["ku3"])),
            sign=Sign(data["sign"]),
            involutions=tuple(Involution.from_dict(t) for t in data.get("involutions", [])),
            children=tuple(QuotientType.parse(c) for c in data.get("children", [])),
            bounds=tuple(MuBounds.from_dict(b) for b in data.get("mu_bounds", [])),
        )


def _opt_format(value: Fraction | None) -> str | None:
    return None if value is None else format_rational(value)


def _opt_parse(value: Any) -> Fraction | None:
    return None if value is None else parse_rational(str(value))


def _correction(qt: QuotientType) -> Fraction:
    return Fraction(1, qt.r * qt.a * (qt.r - qt.a))


def ku3(kx3: Fraction, qt: QuotientType) -> Fraction:
    """``-K_U^3 = -K_X^3 - 1/(r a (r-a))``."""
    return kx3 - _correction(qt)


def kw3(kx3: Fraction, qt1: QuotientType, qt2: QuotientType) -> Fraction:
    """``-K_W^3`` after blowing up two distinct points; symmetric in the points."""
    return kx3 - _correction(qt1) - _correction(qt2)


def exceptional_cube(qt: QuotientType) -> Fraction:
    """``E^3 = r^2 / (a (r-a))`` for the Kawamata blow-up."""
    return Fraction(qt.r * qt.r, qt.a * (qt.r - qt.a))


def discrepancy(qt: QuotientType) -> Fraction:
    return Fraction(1, qt.r)


def sign_class(x: Fraction) -> Sign:
    if x < 0:
        return Sign.NEG
    if x == 0:
        return Sign.ZERO
    return Sign.POS


def blowup_children(qt: QuotientType) -> list[QuotientType]:
    """Quotient points of the blow-up, one per chart of order greater than 1.

    The chart of order ``c`` (``c`` in ``a, r-a``) carries ``1/c(1, r mod c, c - r mod c)``.
    """
    children: list[QuotientType] = []
    for c in (qt.a, qt.r - qt.a):
        if c <= 1:
            continue
        residue = qt.r % c
        child = normalize_quotient(c, (1, residue, c - residue))
        if not isinstance(child, QuotientType):
            raise ValueError(f"Chart of order {c} over {qt} is not terminal: {child.value}")
        children.append(child)
    return children


def _centres(ws: WeightSystem, entry: BasketEntry) -> list[int]:
    return [i for i in entry.locus.indices if ws.weight(i) == entry.qtype.r]


def involutions(ws: WeightSystem, entry: BasketEntry) -> list[Involution]:
    """Involution tags at a basket entry.

    Centres are the locus coordinates whose weight equals the order ``r``.
    For each centre ``i`` and each other index ``j``: Quadratic if
    ``d = 2r + a_j``; Elliptic if ``d = 3r + a_j``. On a double cover
    (``d = 2 a4``) the Elliptic tags are marked ``covering``.
    """
    d = ws.degree
    r = entry.qtype.r
    double_cover = is_double_cover(ws)
    tags: list[Involution] = []
    for i in _centres(ws, entry):
        for j in range(1, 5):
            if j == i:
                continue
            a_j = ws.weight(j)
            if d == 2 * r + a_j:
                tags.append(Involution(InvolutionKind.QUADRATIC, i, j))
            if d == 3 * r + a_j:
                tags.append(Involution(InvolutionKind.ELLIPTIC, i, j, covering=double_cover))
    return sorted(tags)


def mu_bounds(
    ws: WeightSystem, entry: BasketEntry, j: int, kind: InvolutionKind
) -> MuBounds:
    """Bounds on ``mu`` implied by an involution of the given kind toward ``x_j``.

    Raises:
        KindMismatchError: If the point carries no such involution.
    """
    if not any(tag.kind is kind and tag.j == j for tag in involutions(ws, entry)):
        raise KindMismatchError(f"No {kind.value} involution toward x_{j} at {entry.qtype}")
    r, a = entry.qtype.r, entry.qtype.a
    if kind is InvolutionKind.ELLIPTIC:
        return MuBounds(lower_elliptic=Fraction(a * (r + 1), r * r + a * r))
    d, kx3 = degree_and_kx3(ws)
    a_j = ws.weight(j)
    return MuBounds(
        upper_quadratic=a_j * kx3 * (r - a) * a / (d - r),
        upper_cap=Fraction(d - r, r * a_j),
    )


def epsilon_coefficient(
    mu: Fraction,
    nu: Fraction,
    qt: QuotientType,
    variant: EpsilonVariant,
    r: int | None = None,
) -> Fraction:
    """Coefficient of the exceptional divisor after pulling back.

    Variant A at a point ``1/r(1,a,r-a)``: ``nu + (r-2a) mu / (r-a) - 2/r``.
    Variant B at a child ``qt = 1/rb(1,ab,rb-ab)`` of a centre of order ``r``:
    ``nu - (rb-ab)(1/r - mu)/rb - 1/rb``.
    """
    if variant is EpsilonVariant.A:
        return nu + Fraction(qt.r - 2 * qt.a, qt.r - qt.a) * mu - Fraction(2, qt.r)
    if r is None:
        raise ValueError("Variant B needs the order r of the first centre")
    return nu - Fraction(qt.r - qt.a, qt.r) * (Fraction(1, r) - mu) - Fraction(1, qt.r)


def contracted_curves(ws: WeightSystem, involution: Involution, variant: CurveVariant) -> Fraction:
    """Number of curves contracted by the anticanonical model of the blow-up.

    Raises:
        NotApplicableError: If the variant does not fit the involution kind.
    """
    d = ws.degree
    a1, a2, a3, a4 = ws.weights
    if variant is CurveVariant.QUADRATIC:
        if involution.kind is not InvolutionKind.QUADRATIC:
            raise NotApplicableError(f"{variant.value} count needs a quadratic involution")
        r = ws.weight(involution.i)
        k, m = (n for n in range(1, 5) if n not in (involution.i, involution.j))
        return Fraction(d * (d - r), ws.weight(k) * ws.weight(m))
    if involution.kind is not InvolutionKind.ELLIPTIC:
        raise NotApplicableError(f"{variant.value} count needs an elliptic involution")
    if variant is CurveVariant.ELLIPTIC_A:
        return Fraction(d * (d - a4), a3)
    return Fraction(d * (d - a4), a1 * a2)


def midpoint_model(ws: WeightSystem, involution: Involution) -> tuple[tuple[int, ...], int]:
    """Weights and degree of the hypersurface model the involution passes through.

    Quadratic: ``P(1, the three weights other than a_i, a_i a_j)`` of degree
    ``2 a_i a_j``. Elliptic: ``P(1, b, c, 2 a4, 3 a4)`` of degree ``6 a4``
    where ``b, c`` are the weights other than ``a_i`` and ``a4``.

    Raises:
        NotApplicableError: For an elliptic involution centred at ``x4``.
    """
    a_i = ws.weight(involution.i)
    if involution.kind is InvolutionKind.QUADRATIC:
        rest = sorted(ws.weight(m) for m in range(1, 5) if m != involution.i)
        top = a_i * ws.weight(involution.j)
        return (1, *rest, top), 2 * top
    if involution.i == 4:
        raise NotApplicableError("Elliptic midpoint model needs a centre other than x4")
    a4 = ws.weights[3]
    b, c = sorted(ws.weight(m) for m in range(1, 4) if m != involution.i)
    return (1, b, c, 2 * a4, 3 * a4), 6 * a4


def analyse_point(ws: WeightSystem, kx3: Fraction, entry: BasketEntry) -> PointAnalysis:
    """Bundle ``ku3``, its sign, involution tags, children and per-tag bounds."""
    value = ku3(kx3, entry.qtype)
    tags = involutions(ws, entry)
    bounds = tuple(mu_bounds(ws, entry, tag.j, tag.kind) for tag in tags)
    return PointAnalysis(
        entry=entry,
        ku3=value,
        sign=sign_class(value),
        involutions=tuple(tags),
        children=tuple(blowup_children(entry.qtype)),
        bounds=bounds,
    )


def zero_kw3_pairs(
    kx3: Fraction, entries: tuple[BasketEntry, ...] | list[BasketEntry]
) -> list[tuple[BasketEntry, BasketEntry]]:
    """Pairs of distinct basket points whose two corrections add up to ``kx3``.

    An entry pairs with itself only when it holds at least two points.
    """
    pairs: list[tuple[BasketEntry, BasketEntry]] = []
    for first, second in combinations_with_replacement(entries, 2):
        if first is second and first.count < 2:
            continue
        if kw3(kx3, first.qtype, second.qtype) == 0:
            pairs.append((first, second))
    logger.debug("Found %d zero -K_W^3 pairs", len(pairs))
    return pairs


__all__ = [
    "Sign",
    "InvolutionKind",
    "CurveVariant",
    "EpsilonVariant",
    "Involution",
    "MuBounds",
    "PointAnalysis",
    "ku3",
    "kw3",
    "exceptional_cube",
    "discrepancy",
    "sign_class",
    "blowup_children",
    "involutions",
    "mu_bounds",
    "epsilon_coefficient",
    "contracted_curves",
    "midpoint_model",
    "analyse_point",
    "zero_kw3_pairs",
]
