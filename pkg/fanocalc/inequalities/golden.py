"""Registry of the inequality systems that close the per-family arguments.

Multiplicities are normalized to ``n = 1``. Lines under ``# displayed`` are the
inequalities as stated for the family; lines under ``# context`` are the side
conditions the argument applies implicitly (nonnegativity, ``mu > 1/r``, degree
bounds of curves).
"""

from __future__ import annotations

from dataclasses import dataclass

from fanocalc.core.exceptions import UnknownIdError
from fanocalc.inequalities.parser import parse_system
from fanocalc.inequalities.system import LinearSystem, Verdict


@dataclass(frozen=True)
class GoldenSystem:
    """
    One registered system.

    Attributes:
        id: Registry key such as ``SYS-23``
        text: Source in the inequality text format
        expected: Verdict the argument states for the system
        anchor: Which family and branch the system closes
    """

    id: str
    text: str
    expected: Verdict
    anchor: str

    @property
    def system(self) -> LinearSystem:
        return parse_system(self.text)


_SYS_7 = """\
vars: m_C, m_Z
# displayed
m_C <= 1/2
m_C > 1/2*m_Z + 1/2
# context
m_Z >= 0
"""

_SYS_12_DISPLAYED = """\
vars: mu, m_C, m_Z
# displayed
m_C > 11/12 - mu + 1/3*m_Z
4/3*m_Z >= m_C + mu - 5/6
m_C + mu <= 5/4 - m_Z
# context
mu >= 0
m_C >= 0
m_Z >= 0
mu > 1/4
"""

_SYS_12B_EXTRA = """\
# context: quadratic bound at the 1/4(1,1,3) point and curve degrees
mu <= 5/12
m_C <= 5/6
m_Z <= 7/12
"""

_SYS_12A = """\
vars: mu, nu, m_L, m_C, m_Z
# displayed
5/6 - 2/3*mu - nu > m_L + 1/3*m_Z + 3/2 - nu - 2/3*mu - m_L - m_C
4/3*m_Z >= 2*m_C - 1/3
m_C <= 5/6
# context
mu >= 0
nu >= 0
m_L >= 0
m_C >= 0
m_Z >= 0
"""

_SYS_13 = """\
vars: mu
# displayed
mu > 7/10
mu <= 11/30
"""

_SYS_13A = """\
vars: mu, nu, m
# displayed
11/15 - 1/3*mu - nu > 7/5 - nu - 1/3*mu - m
m <= 11/15 - 1/2*mu
# context
mu > 1/5
mu >= 0
nu >= 0
m >= 0
"""

_SYS_23 = """\
vars: mu, m, mbar
# displayed
7/10 - 2*mu - 3/5*mbar > 5/4 - mu - m
m < 7/15
# context
mu > 1/4
mu >= 0
m >= 0
mbar >= 0
"""

_SYS_36 = """\
vars: mu, m_L, m_C, m_Z
# displayed
13/6*mu + 13/6*m_C > 8/7 + 5/6*m_Z
21/48 >= 7/6*m_Z
7/6*m_Z >= 5/6*mu + m_L + 5/6*m_C - 2/7
m_C + m_Z <= 9/14 - mu
3/4 >= m_L
m_L > 1/2 + m_Z
18/77 >= mu
mu > 1/7
# context
m_L >= 0
m_C >= 0
m_Z >= 0
mu >= 0
"""

GOLDEN_SYSTEMS: dict[str, GoldenSystem] = {
    entry.id: entry
    for entry in (
        GoldenSystem("SYS-7", _SYS_7, Verdict.INFEASIBLE, "ℷ=7, the curve C through the point"),
        GoldenSystem(
            "SYS-12",
            _SYS_12_DISPLAYED,
            Verdict.INFEASIBLE,
            "ℷ=12, reducible branch with mu > 1/4",
        ),
        GoldenSystem(
            "SYS-12a", _SYS_12A, Verdict.INFEASIBLE, "ℷ=12, irreducible branch with Q outside E"
        ),
        GoldenSystem(
            "SYS-12b",
            _SYS_12_DISPLAYED + _SYS_12B_EXTRA,
            Verdict.INFEASIBLE,
            "ℷ=12, reducible branch with the quadratic mu-bound and curve degrees",
        ),
        GoldenSystem("SYS-13", _SYS_13, Verdict.INFEASIBLE, "ℷ=13, final mu comparison"),
        GoldenSystem("SYS-13a", _SYS_13A, Verdict.INFEASIBLE, "ℷ=13, C not contained in E"),
        GoldenSystem("SYS-23", _SYS_23, Verdict.INFEASIBLE, "ℷ=23, closing inequality"),
        GoldenSystem("SYS-36", _SYS_36, Verdict.INFEASIBLE, "ℷ=36, the displayed system"),
    )
}


def golden_entry(system_id: str) -> GoldenSystem:
    """Registry entry for ``system_id``.

    Raises:
        UnknownIdError: If the id is not registered.
    """
    try:
        return GOLDEN_SYSTEMS[system_id]
    except KeyError:
        known = ", ".join(sorted(GOLDEN_SYSTEMS))
        raise UnknownIdError(f"Unknown system '{system_id}'. Known: {known}") from None


def golden_system(system_id: str) -> LinearSystem:
    return golden_entry(system_id).system


__all__ = ["GoldenSystem", "GOLDEN_SYSTEMS", "golden_entry", "golden_system"]
