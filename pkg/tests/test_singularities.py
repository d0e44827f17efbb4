from __future__ import annotations

import logging
import math

import pytest

from fanocalc.singularities import (
    Basket,
    BasketEntry,
    Defect,
    Locus,
    QuotientType,
    basket,
    edge_points,
    is_terminal_general,
    normalize_quotient,
    vertex_point,
)
from fanocalc.weighted_space import WeightSystem


def _all_types(max_r: int) -> list[QuotientType]:
    return [
        QuotientType(r, a)
        for r in range(2, max_r + 1)
        for a in range(1, r // 2 + 1)
        if math.gcd(a, r) == 1
    ]


def test_quotient_type_rendering_and_parse() -> None:
    qt = QuotientType(7, 3)
    assert str(qt) == "1/7(1,3,4)"
    assert qt.weights == (1, 3, 4)
    assert QuotientType.parse("1/7(1, 3, 4)") == qt


@pytest.mark.parametrize("r, a", [(1, 1), (5, 3), (6, 2), (4, 0)])
def test_quotient_type_rejects_non_canonical(r, a) -> None:
    with pytest.raises(ValueError):
        QuotientType(r, a)


def test_quotient_type_parse_rejects_bad_sum() -> None:
    with pytest.raises(ValueError, match="do not sum"):
        QuotientType.parse("1/7(1,3,3)")


def test_normalize_quotient_is_idempotent() -> None:
    """Normalizing the weights of a normal form gives it back, for every r up to 30."""
    for qt in _all_types(30):
        assert normalize_quotient(qt.r, qt.weights) == qt


def test_normalize_quotient_rescales() -> None:
    # 1/5(2,4,1) is 1/5(1,2,3) after multiplying by 3
    assert normalize_quotient(5, (2, 4, 1)) == QuotientType(5, 2)
    assert normalize_quotient(7, (8, 10, 11)) == QuotientType(7, 3)


def test_normalize_quotient_defects() -> None:
    assert normalize_quotient(5, (1, 1, 1)) is Defect.NOT_TERMINAL
    assert normalize_quotient(4, (2, 1, 1)) is Defect.NOT_ISOLATED
    with pytest.raises(ValueError):
        normalize_quotient(1, (1, 1, 1))


def test_locus_parse_and_validation() -> None:
    assert Locus.parse("vertex:4") == Locus.vertex(4)
    assert Locus.parse("edge:2,3") == Locus.edge(2, 3)
    assert str(Locus.edge(1, 2)) == "edge:1,2"
    with pytest.raises(ValueError):
        Locus.edge(3, 2)
    with pytest.raises(ValueError):
        Locus.parse("face:1,2,3")


def test_vertex_entries_hold_one_point() -> None:
    with pytest.raises(ValueError, match="exactly one point"):
        BasketEntry(QuotientType(3, 1), 2, Locus.vertex(4))


def test_vertex_point() -> None:
    ws = WeightSystem((2, 4, 5, 9))
    assert vertex_point(ws, 4) == BasketEntry(QuotientType(9, 4), 1, Locus.vertex(4))
    assert vertex_point(ws, 3) is Defect.NOT_ON_X
    assert vertex_point(WeightSystem((1, 2, 2, 3)), 1) is Defect.TRIVIAL_STABILIZER
    assert vertex_point(WeightSystem((2, 2, 5, 7)), 3) is Defect.NOT_TERMINAL
    with pytest.raises(ValueError):
        vertex_point(ws, 0)


def test_edge_points() -> None:
    ws = WeightSystem((2, 2, 3, 5))
    assert edge_points(ws, 1, 2) == BasketEntry(QuotientType(2, 1), 6, Locus.edge(1, 2))
    assert edge_points(ws, 1, 3) is Defect.TRIVIAL_STABILIZER
    # x3^3 and x4^2: one point on the edge
    assert edge_points(WeightSystem((1, 1, 4, 6)), 3, 4) == BasketEntry(
        QuotientType(2, 1), 1, Locus.edge(3, 4)
    )
    with pytest.raises(ValueError):
        edge_points(ws, 2, 2)


def test_edge_points_not_on_x() -> None:
    """A single edge monomial means the general member misses the edge interior."""
    # x3^2 x4 is the only monomial of degree 14 in weights 4 and 6
    ws = WeightSystem((1, 3, 4, 6))
    assert edge_points(ws, 3, 4) is Defect.NOT_ON_X


@pytest.mark.parametrize(
    "weights, expected",
    [
        ((1, 1, 1, 1), ""),
        ((1, 1, 2, 4), "2*1/2(1,1,1)"),
        ((1, 2, 2, 3), "4*1/2(1,1,1);1*1/3(1,1,2)"),
        ((2, 2, 3, 5), "6*1/2(1,1,1);1*1/5(1,2,3)"),
        ((1, 2, 3, 4), "2*1/2(1,1,1);1*1/3(1,1,2);1*1/4(1,1,3)"),
        ((2, 3, 5, 7), "1*1/2(1,1,1);1*1/3(1,1,2);1*1/5(1,2,3);1*1/7(1,2,5)"),
        ((1, 5, 12, 18), "1*1/5(1,2,3);1*1/6(1,1,5)"),
        ((3, 4, 10, 17), "1*1/2(1,1,1);1*1/3(1,1,2);1*1/4(1,1,3);1*1/10(1,3,7)"),
    ],
)
def test_basket(weights, expected) -> None:
    result = basket(WeightSystem(weights))
    assert isinstance(result, Basket)
    assert result.render() == expected


def test_basket_loci() -> None:
    result = basket(WeightSystem((1, 4, 5, 10)))
    assert isinstance(result, Basket)
    loci = {str(entry.locus): (entry.qtype, entry.count) for entry in result}
    assert loci == {
        "edge:2,4": (QuotientType(2, 1), 1),
        "edge:3,4": (QuotientType(5, 1), 2),
    }
    assert result.point_count == 3
    assert result.multiset() == {QuotientType(2, 1): 1, QuotientType(5, 1): 2}


def test_basket_rejections() -> None:
    assert basket(WeightSystem((2, 2, 5, 7))) is Defect.NOT_TERMINAL
    # three weights divisible by 2
    assert basket(WeightSystem((1, 2, 4, 6))) is Defect.NOT_TERMINAL
    assert not is_terminal_general(WeightSystem((2, 2, 5, 7)))
    assert is_terminal_general(WeightSystem((1, 1, 1, 2)))


def test_basket_collapses_point_defects(caplog: pytest.LogCaptureFixture) -> None:
    """A vertex without a tangent monomial still makes the basket NOT_TERMINAL."""
    ws = WeightSystem((1, 2, 3, 7))
    assert vertex_point(ws, 4) is Defect.NOT_QUASISMOOTH
    with caplog.at_level(logging.DEBUG, logger="fanocalc.singularities"):
        assert basket(ws) is Defect.NOT_TERMINAL
    assert "rejected at vertex 4: NotQuasismooth" in caplog.text


def test_basket_rejects_duplicate_loci() -> None:
    entry = BasketEntry(QuotientType(2, 1), 1, Locus.edge(1, 2))
    with pytest.raises(ValueError, match="distinct"):
        Basket((entry, entry))


def test_basket_entry_dict_round_trip() -> None:
    entry = BasketEntry(QuotientType(5, 2), 2, Locus.edge(1, 4))
    assert entry.to_dict() == {"r": 5, "a": 2, "count": 2, "locus": "edge:1,4"}
    assert BasketEntry.from_dict(entry.to_dict()) == entry
