"""Reduction of the degree-2n subring to explicit polynomial quotients.

Two generators ``a, b`` whose normals form a lattice basis are kept; every
other normal is ``e_i = m_i e_a + n_i e_b``, and the multiplicative relations
say exactly that ``v_i = v_a^{m_i} v_b^{n_i}``. Writing ``q u_i`` in the chosen
variables turns the two additive rows into two Laurent polynomials. A row that
is linear in one variable with a monomial coefficient is then solved and
substituted; when no such row is left the ideal is returned as it stands.

Normalizations:

- ``FACET``: ``X = q u_a``, ``Y = q u_b`` so ``q u_i = s^{eta_i - m_i eta_a - n_i eta_b} X^m Y^n``.
- ``MONOTONE``: when the constant parts of the supports are those of a monotone
  polygon with center ``c`` and level ``lam`` (``e_i . c + lam = -const(eta_i)``),
  ``A = s^{-e_a . c} v_a`` and ``q u_i = s^{sym(eta_i) - lam} A^m B^n``.
"""

from __future__ import annotations

import logging
from collections.abc import Sequence
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from math import lcm
from typing import Any

from arith import (
    DomainError,
    LinearForm,
    MPoly,
    ParamSystem,
    UniPoly,
    UsageError,
    parse_relation,
    resultant_uni,
)
from batyrev.errors import ConsistencyError
from batyrev.presentation import QHPresentation
from toric.polytope import Vector, det

logger = logging.getLogger(__name__)


class Normalization(str, Enum):
    FACET = "facet"
    MONOTONE = "monotone"
    AUTO = "auto"


class ReducedKind(str, Enum):
    UNIVARIATE = "univariate"
    BIVARIATE = "bivariate"


@dataclass(frozen=True)
class ReducedPresentation:
    """The quotient ring ``K[gens^(+-1)] / ideal`` a presentation reduces to.

    ``substitutions[i]`` is ``q u_{i+1}`` as a Laurent monomial in ``variables``;
    ``eliminated`` lists ``(variable, value)`` in the order they were solved.
    """

    kind: ReducedKind
    system: ParamSystem
    normalization: Normalization
    variables: tuple[str, ...]
    rows: tuple[MPoly, ...]
    generators: tuple[MPoly, ...]
    substitutions: tuple[MPoly, ...]
    eliminated: tuple[tuple[str, MPoly], ...] = ()
    free_pair: tuple[int, int] = (1, 2)
    center: tuple[Fraction, Fraction] | None = None
    level: Fraction | None = None
    relations: tuple[str, ...] = field(default=())

    @property
    def survivors(self) -> tuple[str, ...]:
        gone = {g for g, _ in self.eliminated}
        return tuple(v for v in self.variables if v not in gone)

    @property
    def quotient(self) -> UniPoly:
        if self.kind is not ReducedKind.UNIVARIATE:
            raise UsageError("A bivariate ideal has no single quotient polynomial")
        return UniPoly.from_mpoly(self.generators[0], self.survivors[0])

    def to_json(self) -> dict[str, Any]:
        out: dict[str, Any] = {
            "kind": self.kind.value,
            "normalization": self.normalization.value,
            "variables": list(self.variables),
            "base_root": self.system.base_root,
            "relations": list(self.relations),
            "free_pair": list(self.free_pair),
            "substitutions": {
                f"qu{i}": w.to_text() for i, w in enumerate(self.substitutions, start=1)
            },
            "eliminated": {g: value.to_text() for g, value in self.eliminated},
            "generators": [g.to_text() for g in self.generators],
        }
        if self.center is not None and self.level is not None:
            out["center"] = [str(c) for c in self.center]
            out["level"] = str(self.level)
        return out


@dataclass(frozen=True)
class ResultantComparison:
    """``Res_G(rows) = unit * x_power * extraneous * quotient`` for the eliminated ``G``."""

    resultant: MPoly
    extraneous: MPoly
    x_power: int

    @property
    def exact(self) -> bool:
        """Whether the resultant equals the quotient up to a unit of the Laurent ring."""
        return self.extraneous.is_term


def _free_pair(pres: QHPresentation) -> tuple[int, int]:
    for rel in pres.relations:
        if len(rel.indices) != 2:
            continue
        i, j = rel.indices
        if abs(det(pres.normals[i - 1], pres.normals[j - 1])) == 1:
            return i, j
    return 1, 2


def _coordinates(e: Vector, ea: Vector, eb: Vector) -> tuple[int, int]:
    d = det(ea, eb)
    m, n = Fraction(det(e, eb), d), Fraction(det(ea, e), d)
    if m.denominator != 1 or n.denominator != 1:
        raise ConsistencyError(f"Normal {e} is not an integral combination of {ea} and {eb}")
    return int(m), int(n)


def monotone_center(
    normals: Sequence[Vector], supports: Sequence[LinearForm]
) -> tuple[tuple[Fraction, Fraction], Fraction] | None:
    """Center ``c`` and level ``lam`` with ``e_i . c + lam = -const(eta_i)`` for all ``i``."""
    rhs = [-eta.const for eta in supports]
    n = len(normals)
    if n < 3:
        return None
    e0, e1 = normals[0], normals[1]
    d1 = (e1[0] - e0[0], e1[1] - e0[1])
    for k in range(2, n):
        d2 = (normals[k][0] - e0[0], normals[k][1] - e0[1])
        d = det(d1, d2)
        if d:
            break
    else:
        return None
    r1, r2 = rhs[1] - rhs[0], rhs[k] - rhs[0]
    c = (Fraction(r1 * d2[1] - r2 * d1[1], d), Fraction(d1[0] * r2 - d2[0] * r1, d))
    level = rhs[0] - (e0[0] * c[0] + e0[1] * c[1])
    for e, r in zip(normals, rhs):
        if e[0] * c[0] + e[1] * c[1] + level != r:
            return None
    if level <= 0:
        return None
    return c, level


def _gen_monomial(system: ParamSystem, exps: dict[str, int]) -> tuple[int, ...]:
    vec = [0] * len(system.variables)
    for name, e in exps.items():
        vec[system.index(name)] += e
    return tuple(vec)


def _clear_negative(poly: MPoly, gens: Sequence[str]) -> MPoly:
    """Multiply by the generator monomial making every generator exponent nonnegative."""
    if not poly:
        return poly
    return poly.mul_monom(
        _gen_monomial(poly.system, {g: -min(poly.min_degree(g), 0) for g in gens})
    )


def _strip_generators(poly: MPoly, gens: Sequence[str]) -> MPoly:
    """Divide out the largest generator monomial (positive or negative) dividing every term."""
    if not poly:
        return poly
    return poly.mul_monom(_gen_monomial(poly.system, {g: -poly.min_degree(g) for g in gens}))


def _gen_coefficient(poly: MPoly, gens: Sequence[str], exps: Sequence[int]) -> MPoly:
    out = poly
    for g, e in zip(gens, exps):
        out = out.coeff_in(g, e)
    return out


def _positive_leading(poly: MPoly, gens: Sequence[str]) -> MPoly:
    if poly and poly.leading_term_in(gens)[1] < 0:
        return -poly
    return poly


def _normalize_row(poly: MPoly, gens: Sequence[str], mode: Normalization) -> MPoly:
    poly = _clear_negative(poly, gens)
    if not poly:
        return poly
    if mode is Normalization.FACET:
        free = _gen_coefficient(poly, gens, [0] * len(gens))
        if free and free.is_term:
            return poly * (-(free**-1))
    idx = [poly.system.index(g) for g in gens]
    lead = poly.leading_term_in(gens)[0]
    coeff = _gen_coefficient(poly, gens, [lead[i] for i in idx])
    if coeff.is_term:
        return poly * coeff**-1
    return _positive_leading(poly, gens)


def _with_relations(system: ParamSystem, relations: Sequence[str]) -> ParamSystem:
    for text in relations:
        system = system.with_relations([parse_relation(text, system)])
    if relations and not system.declared_values_hold():
        logger.warning(
            "Declared relations %s do not hold for the numeric exponent values", list(relations)
        )
    return system


def _base_root(exponents: Sequence[LinearForm]) -> int:
    return lcm(1, *(form.const.denominator for form in exponents))


def _reduce_triangle(pres: QHPresentation, relations: Sequence[str]) -> ReducedPresentation:
    (rel,) = pres.relations
    system = _with_relations(
        ParamSystem(pres.params, ("X",), (), _base_root([rel.s_exponent])), relations
    )
    x = MPoly.variable(system, "X")
    q = x**3 - MPoly.monomial(system, system.monomial_for(rel.s_exponent))
    logger.info("Triangle quotient %s", q.to_text())
    return ReducedPresentation(
        ReducedKind.UNIVARIATE,
        system,
        Normalization.FACET,
        ("X",),
        (q,),
        (q,),
        (x,) * 3,
        (),
        (1, 2),
        relations=tuple(relations),
    )


def reduce(
    pres: QHPresentation,
    normalization: Normalization = Normalization.AUTO,
    relations: Sequence[str] = (),
) -> ReducedPresentation:
    """Reduce to a univariate quotient, or to a two-generator ideal when elimination stalls.

    ``relations`` are declared monomial relations among the parameters
    (``"y=z"``, ``"xyz=1"``), applied as substitutions.
    """
    normalization = Normalization(normalization)
    if pres.size == 3:
        return _reduce_triangle(pres, relations)

    a, b = _free_pair(pres)
    ea, eb = pres.normals[a - 1], pres.normals[b - 1]
    coords = [_coordinates(e, ea, eb) for e in pres.normals]
    found = monotone_center(pres.normals, pres.supports)
    if normalization is Normalization.AUTO:
        normalization = Normalization.MONOTONE if found else Normalization.FACET
    if normalization is Normalization.MONOTONE and found is None:
        raise UsageError("Supports have no monotone center with positive level")

    center: tuple[Fraction, Fraction] | None = None
    level: Fraction | None = None
    if normalization is Normalization.MONOTONE:
        assert found is not None
        center, level = found
        gens = ("A", "B")
        exponents = [LinearForm(-level, eta.coeffs) for eta in pres.supports]
    else:
        gens = ("X", "Y")
        eta_a, eta_b = pres.supports[a - 1], pres.supports[b - 1]
        exponents = [eta - eta_a * m - eta_b * n for eta, (m, n) in zip(pres.supports, coords)]

    system = ParamSystem(pres.params, gens, (), _base_root(exponents))
    system = _with_relations(system, relations)
    subs = tuple(
        MPoly.monomial(system, {**system.monomial_for(exp), gens[0]: m, gens[1]: n})
        for exp, (m, n) in zip(exponents, coords)
    )

    raw = []
    for row in pres.additive:
        poly = MPoly.zero(system)
        for coef, w in zip(row, subs):
            if coef:
                poly = poly + w * coef
        first = min(i for i, c in enumerate(row) if c)
        raw.append((first, _normalize_row(poly, gens, normalization)))
    rows = tuple(poly for _, poly in sorted(raw, key=lambda t: t[0]))
    for poly in rows:
        logger.debug("Additive row: %s = 0", poly.to_text())

    eliminated, current = _eliminate(list(rows), list(gens))
    survivors = [g for g in gens if g not in {v for v, _ in eliminated}]
    if len(survivors) == 1:
        if len(current) != 1:
            raise ConsistencyError(
                f"Elimination left {len(current)} relations in {survivors[0]}; expected one"
            )
        kind = ReducedKind.UNIVARIATE
    else:
        kind = ReducedKind.BIVARIATE
        logger.info("No row is linear in a generator with a monomial coefficient; keeping the ideal")

    reduced = ReducedPresentation(
        kind,
        system,
        normalization,
        gens,
        rows,
        tuple(current),
        subs,
        tuple(eliminated),
        (a, b),
        center,
        level,
        tuple(relations),
    )
    logger.info(
        "Reduced (%s, %s): %s",
        kind.value,
        normalization.value,
        "; ".join(g.to_text() for g in reduced.generators),
    )
    return reduced


def _eliminate(
    rows: list[MPoly], gens: list[str]
) -> tuple[list[tuple[str, MPoly]], list[MPoly]]:
    eliminated: list[tuple[str, MPoly]] = []
    survivors = list(gens)
    while len(survivors) > 1:
        choice = None
        for k, row in enumerate(rows):
            candidates = [
                g
                for g in survivors
                if row.degree(g) == 1 and row.min_degree(g) >= 0 and row.coeff_in(g, 1).is_term
            ]
            if candidates:
                choice = (k, candidates[-1])
                break
        if choice is None:
            break
        k, g = choice
        row = rows.pop(k)
        value = -row.coeff_in(g, 0) * row.coeff_in(g, 1) ** -1
        survivors.remove(g)
        logger.debug("Eliminating %s = %s", g, value.to_text())
        rows = [
            _positive_leading(_strip_generators(r.substitute(g, value), survivors), survivors)
            for r in rows
        ]
        rows = [r for r in rows if r]
        eliminated.append((g, value))
    return eliminated, rows


def verify_elimination(reduced: ReducedPresentation, pres: QHPresentation) -> bool:
    """Check every relation of ``pres`` against the back-substitutions.

    Each relation, written in ``w_i = q u_i``, must reduce to zero modulo the
    quotient (univariate) or be zero or a monomial multiple of an ideal
    generator (bivariate). Away from the triangle the multiplicative relations
    hold identically.
    """
    system = reduced.system
    w = reduced.substitutions
    for rel in pres.relations:
        lhs = MPoly.one(system)
        for i in rel.indices:
            lhs = lhs * w[i - 1]
        rhs = MPoly.monomial(system, system.monomial_for(rel.s_exponent))
        for m, k in rel.monomial:
            rhs = rhs * w[m - 1] ** k
        if not _row_in_ideal(lhs - rhs, reduced):
            logger.warning("Relation %s fails under the substitutions", rel.to_text())
            return False

    for row in pres.additive:
        poly = MPoly.zero(system)
        for coef, wi in zip(row, w):
            if coef:
                poly = poly + wi * coef
        if not _row_in_ideal(poly, reduced):
            logger.warning("Additive row %s is not in the reduced ideal", list(row))
            return False
    return True


def _row_in_ideal(poly: MPoly, reduced: ReducedPresentation) -> bool:
    survivors = reduced.survivors
    if reduced.kind is ReducedKind.UNIVARIATE:
        for g, value in reduced.eliminated:
            poly = _clear_negative(poly, [g]).substitute(g, value)
        poly = _clear_negative(poly, survivors)
        return not UniPoly.from_mpoly(poly, survivors[0]).rem(reduced.quotient)
    if not poly:
        return True
    for gen in reduced.generators:
        try:
            if poly.exquo(gen).is_term:
                return True
        except DomainError:
            continue
    return False


def resultant_comparison(reduced: ReducedPresentation) -> ResultantComparison:
    """Eliminate by a resultant instead of substitution and compare with the quotient."""
    if reduced.kind is not ReducedKind.UNIVARIATE or not reduced.eliminated:
        raise UsageError("Resultant comparison needs a univariate reduction with an eliminated variable")
    if len(reduced.rows) != 2:
        raise UsageError("Resultant comparison needs exactly two rows")
    system = reduced.system
    g = reduced.eliminated[0][0]
    (survivor,) = reduced.survivors
    coeff_system = system.with_generator_as_param(survivor)
    f1, f2 = (UniPoly.from_mpoly(r.in_system(coeff_system), g) for r in reduced.rows)
    res = resultant_uni(f1, f2).to_mpoly().in_system(system)
    x_power = res.min_degree(survivor)
    stripped = _strip_generators(res, [survivor])
    extraneous = stripped.exquo(reduced.generators[0])
    logger.info(
        "Resultant in %s: %s^%d * (%s) * quotient", g, survivor, x_power, extraneous.to_text()
    )
    return ResultantComparison(res, extraneous, x_power)
