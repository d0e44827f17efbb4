from __future__ import annotations

import itertools
import random
from fractions import Fraction

import pytest

from fanocalc.core.exceptions import DimensionMismatchError, UnknownIdError
from fanocalc.inequalities import (
    GOLDEN_SYSTEMS,
    Constraint,
    Feasible,
    Infeasible,
    InfeasibilityCertificate,
    LinearSystem,
    Relation,
    Verdict,
    check_certificate,
    fm_feasibility,
    golden_entry,
    golden_system,
    parse_system,
)

DECIDED_INFEASIBLE = ["SYS-7", "SYS-12a", "SYS-13", "SYS-13a", "SYS-23", "SYS-36"]
DECIDED_FEASIBLE = ["SYS-12", "SYS-12b"]


def _constraint(coefficients, rhs, strict=False) -> Constraint:
    return Constraint(
        tuple(Fraction(c) for c in coefficients),
        Relation.LT if strict else Relation.LE,
        Fraction(rhs),
    )


def test_registry_holds_every_system() -> None:
    assert set(GOLDEN_SYSTEMS) == set(DECIDED_INFEASIBLE) | set(DECIDED_FEASIBLE)
    assert golden_entry("SYS-23").anchor.startswith("ℷ=23")


def test_unknown_golden_system() -> None:
    with pytest.raises(UnknownIdError, match="SYS-99"):
        golden_system("SYS-99")


@pytest.mark.parametrize("system_id", DECIDED_INFEASIBLE)
def test_golden_infeasible_with_valid_certificate(system_id) -> None:
    system = golden_system(system_id)
    outcome = fm_feasibility(system)
    assert isinstance(outcome, Infeasible)
    assert outcome.verdict is Verdict.INFEASIBLE
    assert check_certificate(system, outcome.certificate)


@pytest.mark.parametrize("system_id", DECIDED_FEASIBLE)
def test_golden_feasible_witness(system_id) -> None:
    """These two systems admit points; the witness satisfies every constraint."""
    system = golden_system(system_id)
    outcome = fm_feasibility(system)
    assert isinstance(outcome, Feasible)
    assert system.satisfied_by(outcome.witness)


def test_known_points_of_feasible_systems() -> None:
    sys12 = golden_system("SYS-12")
    assert sys12.satisfied_by(
        {"mu": Fraction(1, 2), "m_C": Fraction(1, 2), "m_Z": Fraction(1, 6)}
    )
    sys12b = golden_system("SYS-12b")
    assert sys12b.satisfied_by(
        {"mu": Fraction(1, 3), "m_C": Fraction(2, 3), "m_Z": Fraction(1, 6)}
    )


def test_sys13_certificate() -> None:
    """mu > 7/10 and mu <= 11/30 add up to 0 < -1/3."""
    outcome = fm_feasibility(golden_system("SYS-13"))
    assert isinstance(outcome, Infeasible)
    assert outcome.certificate.multipliers == (Fraction(1), Fraction(1))


@pytest.mark.parametrize("system_id", DECIDED_INFEASIBLE + DECIDED_FEASIBLE)
def test_verdict_independent_of_order(system_id) -> None:
    system = golden_system(system_id)
    expected = fm_feasibility(system).verdict
    for order in itertools.islice(itertools.permutations(system.variables), 24):
        outcome = fm_feasibility(system, order)
        assert outcome.verdict is expected
        if isinstance(outcome, Infeasible):
            assert check_certificate(system, outcome.certificate)
        else:
            assert system.satisfied_by(outcome.witness)


def test_order_must_be_a_permutation() -> None:
    system = golden_system("SYS-7")
    with pytest.raises(ValueError, match="permutation"):
        fm_feasibility(system, ["m_C"])


def test_strictness_decides_boundary() -> None:
    closed = LinearSystem(("x",), (_constraint([1], 1), _constraint([-1], -1)))
    outcome = fm_feasibility(closed)
    assert isinstance(outcome, Feasible)
    assert outcome.witness == {"x": Fraction(1)}

    half_open = LinearSystem(("x",), (_constraint([1], 1, strict=True), _constraint([-1], -1)))
    assert isinstance(fm_feasibility(half_open), Infeasible)


def test_empty_and_constant_systems() -> None:
    assert isinstance(fm_feasibility(LinearSystem(("x", "y"))), Feasible)
    contradiction = LinearSystem(("x",), (_constraint([0], -1),))
    outcome = fm_feasibility(contradiction)
    assert isinstance(outcome, Infeasible)
    assert outcome.certificate.multipliers == (Fraction(1),)


def test_unbounded_variable_gets_a_value() -> None:
    system = parse_system("x > 5\ny <= x - 10\n")
    outcome = fm_feasibility(system)
    assert isinstance(outcome, Feasible)
    assert system.satisfied_by(outcome.witness)


def test_check_certificate_rejections() -> None:
    system = golden_system("SYS-13")
    with pytest.raises(DimensionMismatchError):
        check_certificate(system, InfeasibilityCertificate((Fraction(1),)))
    assert not check_certificate(system, InfeasibilityCertificate((Fraction(0), Fraction(0))))
    assert not check_certificate(system, InfeasibilityCertificate((Fraction(-1), Fraction(1))))
    # does not cancel mu
    assert not check_certificate(system, InfeasibilityCertificate((Fraction(2), Fraction(1))))


def test_linear_system_validation() -> None:
    with pytest.raises(ValueError, match="Duplicate"):
        LinearSystem(("x", "x"))
    with pytest.raises(ValueError, match="coefficients"):
        LinearSystem(("x", "y"), (_constraint([1], 0),))


def test_render_parses_back() -> None:
    system = golden_system("SYS-36")
    again = parse_system(system.render())
    assert again.variables == system.variables
    assert [(c.coefficients, c.relation, c.rhs) for c in again.constraints] == [
        (c.coefficients, c.relation, c.rhs) for c in system.constraints
    ]


def test_result_to_dict() -> None:
    outcome = fm_feasibility(golden_system("SYS-13"))
    assert outcome.to_dict() == {"verdict": "Infeasible", "multipliers": ["1/1", "1/1"]}


def _vertex_oracle(system: LinearSystem) -> bool:
    """Decide a bounded system by enumerating the vertices of its closure.

    The centroid of all vertices lies in the relative interior of the closed
    polytope, so the strict rows hold somewhere exactly when they hold there
    or at a vertex.
    """
    n = len(system.variables)
    rows = [(c.coefficients, c.rhs) for c in system.constraints]
    closed = []
    for chosen in itertools.combinations(rows, n):
        point = _solve(chosen, n)
        if point is not None and all(_value(c, point) <= r for c, r in rows):
            closed.append(point)
    if not closed:
        return False
    centroid = tuple(sum(coords, Fraction(0)) / len(closed) for coords in zip(*closed))
    return any(
        all(c.holds_at(point) for c in system.constraints) for point in [*closed, centroid]
    )


def _value(coefficients: tuple[Fraction, ...], point: tuple[Fraction, ...]) -> Fraction:
    return sum((c * x for c, x in zip(coefficients, point)), Fraction(0))


def _solve(rows, n: int) -> tuple[Fraction, ...] | None:
    """Unique solution of ``n`` equalities by Gauss–Jordan elimination, if any."""
    matrix = [[*coefficients, rhs] for coefficients, rhs in rows]
    for col in range(n):
        pivot = next((r for r in range(col, n) if matrix[r][col] != 0), None)
        if pivot is None:
            return None
        matrix[col], matrix[pivot] = matrix[pivot], matrix[col]
        for r in range(n):
            if r != col and matrix[r][col] != 0:
                factor = matrix[r][col] / matrix[col][col]
                matrix[r] = [x - factor * y for x, y in zip(matrix[r], matrix[col])]
    return tuple(matrix[i][n] / matrix[i][i] for i in range(n))


def _random_system(rng: random.Random, n: int) -> LinearSystem:
    constraints = []
    for _ in range(rng.randint(2, 8)):
        coefficients = [Fraction(rng.randint(-3, 3), rng.randint(1, 3)) for _ in range(n)]
        constraints.append(
            _constraint(coefficients, rng.randint(-3, 3), strict=rng.random() < 0.5)
        )
    # keep the region inside the box the oracle searches
    for i in range(n):
        unit = [int(k == i) for k in range(n)]
        constraints.append(_constraint(unit, 3))
        constraints.append(_constraint([-u for u in unit], 3))
    names = tuple(f"x{i}" for i in range(n))
    return LinearSystem(names, tuple(constraints))


def _check_against_oracle(seed: int) -> None:
    rng = random.Random(seed)
    system = _random_system(rng, 1 + seed % 4)
    outcome = fm_feasibility(system)
    if isinstance(outcome, Feasible):
        assert system.satisfied_by(outcome.witness), seed
        assert _vertex_oracle(system), seed
    else:
        assert check_certificate(system, outcome.certificate), seed
        assert not _vertex_oracle(system), seed

    order = list(system.variables)
    rng.shuffle(order)
    shuffled = fm_feasibility(system, order)
    assert shuffled.verdict is outcome.verdict, (seed, order)
    if isinstance(shuffled, Feasible):
        assert system.satisfied_by(shuffled.witness), (seed, order)
    else:
        assert check_certificate(system, shuffled.certificate), (seed, order)


def test_random_systems_agree_with_vertex_oracle() -> None:
    for seed in range(100):
        _check_against_oracle(seed)


@pytest.mark.integration
def test_random_systems_agree_with_vertex_oracle_extended() -> None:
    for seed in range(100, 1100):
        _check_against_oracle(seed)
