"""Text format for linear inequality systems.

One constraint per line, linear terms on both sides::

    vars: mu, m_C, m_Z          # optional; otherwise first-appearance order
    3/5*m_Z + mu < 7/10
    m_C > 1/2*m_Z + 1/2         # comments start with '#'
    2*mu = 1                    # stored as two '<=' constraints

Relations: ``<``, ``<=``, ``>``, ``>=``, ``=``, ``≤``, ``≥``. A term is a
constant ``p`` or ``p/q``, a name, or a coefficient and a name (``p/q*name``,
``2mu``).
"""

from __future__ import annotations

import re
from fractions import Fraction

from fanocalc.core.exceptions import ParseError
from fanocalc.inequalities.system import Constraint, LinearSystem, Relation

_RELATION_RE = re.compile(r"<=|>=|≤|≥|<|>|=")
_TERM_RE = re.compile(r"^(?:(\d+)(?:/(\d+))?)?\*?([^\W\d]\w*)?$")
_SIGNED_TERM_RE = re.compile(r"[+-]?[^+-]+")
_NAME_RE = re.compile(r"^[^\W\d]\w*$")

_CANONICAL = {"≤": "<=", "≥": ">="}

Linear = tuple[dict[str, Fraction], Fraction]


def _parse_side(text: str, line: int) -> Linear:
    compact = text.replace(" ", "").replace("\t", "")
    if not compact:
        raise ParseError(line, "empty side of a relation")
    if _SIGNED_TERM_RE.sub("", compact):
        raise ParseError(line, f"cannot read '{text.strip()}'")
    coefficients: dict[str, Fraction] = {}
    constant = Fraction(0)
    for raw in _SIGNED_TERM_RE.findall(compact):
        sign = -1 if raw.startswith("-") else 1
        body = raw.lstrip("+-")
        match = _TERM_RE.match(body)
        if match is None or not body or body == "*":
            raise ParseError(line, f"invalid term '{raw}'")
        numerator, denominator, name = match.groups()
        if numerator is None and name is None:
            raise ParseError(line, f"invalid term '{raw}'")
        if denominator is not None and int(denominator) == 0:
            raise ParseError(line, f"zero denominator in '{raw}'")
        if body.startswith("*") or (name is None and body.endswith("*")):
            raise ParseError(line, f"invalid term '{raw}'")
        value = Fraction(int(numerator or 1), int(denominator or 1)) * sign
        if name is None:
            constant += value
        else:
            coefficients[name] = coefficients.get(name, Fraction(0)) + value
    return coefficients, constant


def _parse_line(text: str, line: int) -> tuple[str, Linear, Linear]:
    relations = _RELATION_RE.findall(text)
    if len(relations) != 1:
        raise ParseError(line, "expected exactly one relation")
    relation = _CANONICAL.get(relations[0], relations[0])
    left, right = _RELATION_RE.split(text, maxsplit=1)
    return relation, _parse_side(left, line), _parse_side(right, line)


def parse_system(text: str) -> LinearSystem:
    """Parse the text format into a :class:`LinearSystem`.

    Raises:
        ParseError: On the first malformed line, carrying its 1-based number.
    """
    declared: list[str] | None = None
    seen: list[str] = []
    parsed: list[tuple[int, str, Linear, Linear, str]] = []
    note = ""

    for number, raw in enumerate(text.splitlines(), start=1):
        body, _, comment = raw.partition("#")
        body = body.strip()
        if not body:
            # A comment-only line labels the constraints that follow it.
            if comment.strip():
                note = comment.strip()
            continue
        if body.lower().startswith("vars:"):
            names = [name.strip() for name in body[5:].split(",") if name.strip()]
            bad = [name for name in names if not _NAME_RE.match(name)]
            if bad or len(set(names)) != len(names):
                raise ParseError(number, f"invalid variable declaration {names}")
            declared = names
            continue
        relation, left, right = _parse_line(body, number)
        for name in (*left[0], *right[0]):
            if name not in seen:
                seen.append(name)
        parsed.append((number, relation, left, right, comment.strip() or note))

    if declared is not None:
        unknown = [name for name in seen if name not in declared]
        if unknown:
            raise ParseError(0, f"undeclared variables {unknown}")
        variables = declared
    else:
        variables = seen

    constraints: list[Constraint] = []
    for _number, relation, (lhs, lconst), (rhs, rconst), label in parsed:
        # lhs - rhs  (relation)  rconst - lconst
        diff = [lhs.get(v, Fraction(0)) - rhs.get(v, Fraction(0)) for v in variables]
        bound = rconst - lconst
        if relation in (">", ">="):
            diff = [-c for c in diff]
            bound = -bound
        if relation == "=":
            constraints.append(Constraint(tuple(diff), Relation.LE, bound, label))
            constraints.append(Constraint(tuple(-c for c in diff), Relation.LE, -bound, label))
            continue
        kind = Relation.LT if relation in ("<", ">") else Relation.LE
        constraints.append(Constraint(tuple(diff), kind, bound, label))

    return LinearSystem(tuple(variables), tuple(constraints))


__all__ = ["parse_system"]
