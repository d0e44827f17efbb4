from __future__ import annotations

from fractions import Fraction

import pytest

from fanocalc.core.exceptions import ParseError
from fanocalc.inequalities import Relation, parse_system


def test_parse_declared_variables() -> None:
    system = parse_system("vars: mu, m\n3/5*m + mu < 7/10\n")
    assert system.variables == ("mu", "m")
    (constraint,) = system.constraints
    assert constraint.coefficients == (Fraction(1), Fraction(3, 5))
    assert constraint.relation is Relation.LT
    assert constraint.rhs == Fraction(7, 10)


def test_parse_first_appearance_order() -> None:
    system = parse_system("b + a <= 1\nc >= 0\n")
    assert system.variables == ("b", "a", "c")


def test_parse_moves_terms_across() -> None:
    """Both sides may carry variables and constants."""
    system = parse_system("2mu + 1 > 1/2*m - 3\n")
    (constraint,) = system.constraints
    # -2 mu + 1/2 m < 4
    assert system.variables == ("mu", "m")
    assert constraint.coefficients == (Fraction(-2), Fraction(1, 2))
    assert constraint.rhs == Fraction(4)
    assert constraint.strict


def test_parse_unicode_relations_and_equality() -> None:
    system = parse_system("x ≤ 1\nx ≥ -1\n2*x = 1\n")
    relations = [c.relation for c in system.constraints]
    assert relations == [Relation.LE] * 4
    assert system.constraints[2].coefficients == (Fraction(2),)
    assert system.constraints[3].coefficients == (Fraction(-2),)
    assert system.constraints[3].rhs == Fraction(-1)


def test_parse_notes_from_comments() -> None:
    text = "# displayed\nx < 1\ny <= 2  # inline\n# context\nx >= 0\n"
    notes = [c.note for c in parse_system(text).constraints]
    assert notes == ["displayed", "inline", "context"]


def test_parse_collects_repeated_names() -> None:
    system = parse_system("x + x - 1/2*x <= 3\n")
    assert system.constraints[0].coefficients == (Fraction(3, 2),)


@pytest.mark.parametrize(
    "text, line, message",
    [
        ("x < 1\n<= 2\n", 2, "empty side"),
        ("x < y < 1\n", 1, "exactly one relation"),
        ("x + 1\n", 1, "exactly one relation"),
        ("x <= 1/0\n", 1, "zero denominator"),
        ("x <= 2*\n", 1, "invalid term"),
        ("x <= 1.5\n", 1, "cannot read|invalid term"),
        ("vars: x, x\nx <= 1\n", 1, "invalid variable declaration"),
        ("vars: x\nx + y <= 1\n", 0, "undeclared"),
    ],
)
def test_parse_errors(text, line, message) -> None:
    with pytest.raises(ParseError, match=message) as excinfo:
        parse_system(text)
    assert excinfo.value.line == line
