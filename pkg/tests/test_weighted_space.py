from __future__ import annotations

import itertools
import random
from fractions import Fraction

import pytest

from fanocalc.weighted_space import (
    WeightSystem,
    degree_and_kx3,
    has_monomial,
    is_double_cover,
    is_quasismooth_general,
    is_well_formed,
    monomials,
)


def test_weight_system_degree_and_ambient() -> None:
    ws = WeightSystem((1, 2, 2, 3))
    assert ws.degree == 8
    assert ws.ambient == (1, 1, 2, 2, 3)
    assert ws.weight(0) == 1
    assert ws.weight(4) == 3
    assert str(ws) == "(1,2,2,3;8)"


@pytest.mark.parametrize(
    "weights, message",
    [
        ((1, 2, 3), "four weights"),
        ((0, 1, 2, 3), "positive"),
        ((3, 2, 1, 1), "ascending"),
    ],
)
def test_weight_system_rejects_bad_weights(weights, message) -> None:
    with pytest.raises(ValueError, match=message):
        WeightSystem(weights)


def test_weight_system_dict_round_trip() -> None:
    ws = WeightSystem((2, 3, 5, 7))
    assert WeightSystem.from_dict(ws.to_dict()) == ws


def test_weight_system_from_dict_checks_degree() -> None:
    """A stored degree must agree with the weights."""
    with pytest.raises(ValueError, match="Degree 19"):
        WeightSystem.from_dict({"weights": [2, 4, 5, 9], "degree": 19})


@pytest.mark.parametrize(
    "weights, expected",
    [
        ((1, 1, 1, 1), (4, Fraction(4))),
        ((1, 2, 6, 9), (18, Fraction(1, 6))),
        ((2, 2, 3, 7), (14, Fraction(1, 6))),
        ((2, 3, 4, 5), (14, Fraction(7, 60))),
        ((5, 6, 22, 33), (66, Fraction(1, 330))),
    ],
)
def test_degree_and_kx3(weights, expected) -> None:
    assert degree_and_kx3(WeightSystem(weights)) == expected


def test_monomials_lists_all_exponent_vectors() -> None:
    assert monomials([1, 2], 4) == [(0, 2), (2, 1), (4, 0)]
    assert monomials([2, 4], 8) == [(0, 2), (2, 1), (4, 0)]
    assert monomials([4, 6], 9) == []
    assert monomials([3], 0) == [(0,)]
    assert monomials([12, 18], 36) == [(0, 2), (3, 0)]
    assert len(monomials([2, 2], 12)) == 7
    assert monomials([5], 36) == []


@pytest.mark.parametrize("seed", range(40))
def test_monomials_are_exact_sorted_and_complete(seed: int) -> None:
    rng = random.Random(seed)
    subset = [rng.randint(1, 7) for _ in range(rng.randint(1, 4))]
    d = rng.randint(0, 24)
    found = monomials(subset, d)

    assert all(len(e) == len(subset) and min(e) >= 0 for e in found)
    assert all(sum(k * w for k, w in zip(e, subset)) == d for e in found)
    assert found == sorted(set(found))
    brute = [
        e
        for e in itertools.product(*(range(d // w + 1) for w in subset))
        if sum(k * w for k, w in zip(e, subset)) == d
    ]
    assert len(found) == len(brute)


def test_monomials_rejects_empty_subset() -> None:
    with pytest.raises(ValueError, match="nonempty"):
        monomials([], 4)
    with pytest.raises(ValueError, match="positive"):
        monomials([0, 2], 4)


def test_has_monomial_agrees_with_monomials() -> None:
    """The memoized decision matches the explicit listing."""
    for subset in ([2, 3], [4, 6], [3, 5, 7], [6, 10, 15], [9]):
        for d in range(0, 40):
            assert has_monomial(subset, d) == bool(monomials(subset, d)), (subset, d)
    assert has_monomial([2, 3], -1) is False


def test_is_well_formed() -> None:
    assert is_well_formed(WeightSystem((1, 2, 2, 3)))
    assert not is_well_formed(WeightSystem((2, 2, 4, 6)))


def test_is_double_cover() -> None:
    assert is_double_cover(WeightSystem((1, 1, 3, 5)))
    assert is_double_cover(WeightSystem((1, 1, 1, 3)))
    assert not is_double_cover(WeightSystem((1, 2, 2, 3)))


@pytest.mark.parametrize(
    "weights, expected",
    [
        ((1, 1, 1, 1), True),
        ((1, 1, 2, 3), True),
        ((1, 2, 5, 8), True),
        ((2, 2, 5, 7), True),
        ((5, 6, 22, 33), True),
        ((1, 2, 3, 7), False),
        ((1, 2, 2, 2), False),
        ((1, 1, 3, 4), True),
        ((2, 3, 5, 9), False),
        ((1, 3, 3, 4), False),
    ],
)
def test_is_quasismooth_general(weights, expected) -> None:
    assert is_quasismooth_general(WeightSystem(weights)) is expected
