"""Univariate members of the three-point blow-up ideal, case by case.

The reduced ideal is generated by

    g1 = A^2 B^2 + x A^2 B - B - z
    g2 = A^2 B^2 + y A B^2 - A - z

Eliminating ``B`` goes through two intermediate members that are linear in
``B``::

    eq3 = (A + y) g1 - A g2             = (A + y)(x A^2 - 1) B + (A^2 - y z)
    eq4 = A B eq3 - (x A^2 - 1) g2      = A (A^2 - y z) B + (x A^2 - 1)(A + z)

and ``f = c4 eq4 - c3 eq3`` with ``c3, c4`` chosen so the ``B`` terms cancel.
The choice depends on which monomial relations were declared among ``x, y, z``.
The ``B`` side follows from the symmetry swapping ``A <-> B`` and ``x <-> y``,
which exchanges ``g1`` and ``g2``.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction

from arith import MPoly, ParamSystem, UniPoly, UsageError, resultant_uni
from ssalg.certificate import Certificate, MembershipWitness
from ssalg.seidenberg import seidenberg_radical_check

logger = logging.getLogger(__name__)

_SWAP = {"A": "B", "B": "A", "x": "y", "y": "x"}


class HexagonCase(str, Enum):
    GENERIC = "generic"
    Y_EQUALS_Z = "y=z"
    XYZ_ONE = "xyz=1"


@dataclass(frozen=True)
class CaseCheck:
    label: str
    polynomial: MPoly
    value: Fraction


@dataclass(frozen=True)
class CaseElimination:
    """A member ``f`` of the ideal in one generator, with its certifying multipliers.

    ``factors`` is the split ``f = factors[0] * factors[1]`` used by the
    special cases (empty in the generic case).
    """

    case: HexagonCase
    var: str
    member: MembershipWitness
    factors: tuple[MPoly, ...] = field(default=())

    @property
    def polynomial(self) -> UniPoly:
        return UniPoly.from_mpoly(self.member.target, self.var)


def _check_system(system: ParamSystem) -> None:
    if system.generators != ("A", "B"):
        raise UsageError(f"Expected generators (A, B), got {system.generators}")
    missing = [n for n in ("x", "y", "z") if n not in system.param_names]
    if missing:
        raise UsageError(f"Missing parameters {', '.join(missing)}")


def _v(system: ParamSystem, name: str) -> MPoly:
    return MPoly.variable(system, name)


def hexagon_ideal(system: ParamSystem) -> tuple[MPoly, MPoly]:
    _check_system(system)
    a, b, x, y, z = (_v(system, n) for n in ("A", "B", "x", "y", "z"))
    g1 = a**2 * b**2 + x * a**2 * b - b - z
    g2 = a**2 * b**2 + y * a * b**2 - a - z
    return g1, g2


def declared_loci(system: ParamSystem) -> tuple[MPoly, ...]:
    """``y - z``, ``x - z`` and ``xyz - 1`` under the declared relations, zeros dropped."""
    _check_system(system)
    x, y, z = (_v(system, n) for n in ("x", "y", "z"))
    return tuple(p for p in (y - z, x - z, x * y * z - 1) if p)


def detect_case(system: ParamSystem, var: str = "A") -> HexagonCase:
    """Case of the ``var`` side, decided only by declared relations."""
    _check_system(system)
    x, y, z = (_v(system, n) for n in ("x", "y", "z"))
    if not (x * y * z - 1):
        return HexagonCase.XYZ_ONE
    if not ((y - z) if var == "A" else (x - z)):
        return HexagonCase.Y_EQUALS_Z
    return HexagonCase.GENERIC


def _chain(generic: ParamSystem, case: HexagonCase) -> tuple[MPoly, MPoly, MPoly]:
    """``(f, m1, m2)`` with ``f = m1 g1 + m2 g2`` in the relation-free system."""
    a, b, x, y, z = (_v(generic, n) for n in ("A", "B", "x", "y", "z"))
    if case is HexagonCase.GENERIC:
        c4, c3 = (a + y) * (x * a**2 - 1), a * (a**2 - y * z)
    elif case is HexagonCase.Y_EQUALS_Z:
        c4, c3 = x * a**2 - 1, a * (a - y)
    else:
        c4, c3 = a + y, x**-1 * a
    lead = c4 * a * b - c3
    m1 = lead * (a + y)
    m2 = -lead * a - c4 * (x * a**2 - 1)
    g1, g2 = hexagon_ideal(generic)
    return m1 * g1 + m2 * g2, m1, m2


def _factors(system: ParamSystem, case: HexagonCase, var: str, f: MPoly) -> tuple[MPoly, ...]:
    t = _v(system, var)
    x, y = _v(system, "x"), _v(system, "y")
    if var == "B":
        x, y = y, x
    if case is HexagonCase.Y_EQUALS_Z:
        linear = t + y
    elif case is HexagonCase.XYZ_ONE:
        linear = x * t**2 - 1
    else:
        return ()
    return linear, f.exquo(linear)


def case_member(system: ParamSystem, var: str = "A") -> CaseElimination:
    """The member in ``var`` for the declared case, mapped into ``system``."""
    _check_system(system)
    if var not in ("A", "B"):
        raise UsageError(f"Unknown side {var!r}")
    case = detect_case(system, var)
    generic = system.generic()
    f, m1, m2 = _chain(generic, case)
    if var == "B":
        f, m1, m2 = (p.in_system(generic, _SWAP) for p in (f, m2, m1))
    f, m1, m2 = (p.in_system(system) for p in (f, m1, m2))
    other = "B" if var == "A" else "A"
    if other in f.variables_used():
        raise ArithmeticError(f"{case.value} chain left {other} in {f.to_text()}")
    ideal = hexagon_ideal(system)
    member = MembershipWitness(f, ideal, (m1, m2), f"{case.value} chain in {var}")
    if not member.holds():
        raise ArithmeticError(f"{case.value} chain is not a combination of the generators")
    logger.info("Case %s member in %s of degree %d", case.value, var, f.degree(var))
    return CaseElimination(case, var, member, _factors(system, case, var, f))


def case_checks(elim: CaseElimination) -> list[CaseCheck]:
    """The hand checks for each case, evaluated at the all-ones point.

    generic: ``Res(f, f') / (x^2 (y-z)^2 (xyz-1)^4)`` at ``(1,1,1)``.
    ``y=z``: ``Res(f0, f0') / (x^2 (xy^2-1)^2)`` and ``f0(-y)`` at ``(1,1)``.
    ``xyz=1``: ``d = -Res(f0, f0')`` and ``f0(1), f0(-1)`` at ``(1,1)``.
    """
    member = elim.member.target
    system = member.system
    var = elim.var
    ones = {n: 1 for n in system.active_params}
    x, y, z = (_v(system, n) for n in ("x", "y", "z"))
    if var == "B":
        x, y = y, x
    checks: list[CaseCheck] = []

    def res_disc(p: MPoly) -> MPoly:
        u = UniPoly.from_mpoly(p, var)
        return resultant_uni(u, u.derivative()).to_mpoly()

    if elim.case is HexagonCase.GENERIC:
        h0 = res_disc(member).exquo(x**2 * (y - z) ** 2 * (x * y * z - 1) ** 4)
        checks.append(CaseCheck("h0", h0, h0.evaluate(ones)))
    elif elim.case is HexagonCase.Y_EQUALS_Z:
        linear, f0 = elim.factors
        h0 = res_disc(f0).exquo(x**2 * (x * y * z - 1) ** 2).primitive_part()
        checks.append(CaseCheck("h0", h0, h0.evaluate(ones)))
        at_root = f0.substitute(var, -y)
        checks.append(CaseCheck(f"f0(-{y.to_text()})", at_root, at_root.evaluate(ones)))
    else:
        _, f0 = elim.factors
        d = -res_disc(f0)
        checks.append(CaseCheck("d", d, d.evaluate(ones)))
        for sign in (1, -1):
            value = f0.substitute(var, MPoly.constant(system, sign))
            checks.append(CaseCheck(f"f0({sign})", value, value.evaluate(ones)))
    for check in checks:
        logger.debug("%s check %s = %s", elim.case.value, check.label, check.value)
    return checks


def hexagon_certificate(system: ParamSystem) -> Certificate:
    """Seidenberg's check on the ideal with the case members of both sides."""
    ideal = hexagon_ideal(system)
    side_a = case_member(system, "A")
    side_b = case_member(system, "B")
    loci = declared_loci(system)
    cert = seidenberg_radical_check(ideal, side_a.member, side_b.member, loci)
    note = f"A side: {side_a.case.value}; B side: {side_b.case.value}"
    return Certificate(
        cert.verdict,
        cert.subject,
        membership=cert.membership,
        parts=cert.parts,
        note=f"{note}; {cert.note}" if cert.note else note,
    )


def matches_ideal(generators: tuple[MPoly, ...], system: ParamSystem) -> bool:
    """Whether ``generators`` are the two hexagon generators in some order."""
    try:
        g1, g2 = hexagon_ideal(system)
    except UsageError:
        return False
    return len(generators) == 2 and {g.to_text() for g in generators} == {
        g1.to_text(),
        g2.to_text(),
    }
