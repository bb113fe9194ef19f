"""Re-check a certificate from its witnesses alone.

Only ring operations and specialization are used: resultants are recomputed
at the witness point as plain rational Sylvester determinants.
"""

from __future__ import annotations

import logging
from fractions import Fraction

from arith import DomainError, MPoly, UniPoly
from ssalg.certificate import (
    Certificate,
    IdempotentWitness,
    MembershipWitness,
    NilpotentWitness,
    NonvanishingWitness,
    ResultantWitness,
    SummandWitness,
    TraceFormWitness,
    Verdict,
)

logger = logging.getLogger(__name__)


def rational_det(rows: list[list[Fraction]]) -> Fraction:
    """Determinant by Gaussian elimination over the rationals."""
    m = [list(r) for r in rows]
    n = len(m)
    det = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if m[r][col]), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            det = -det
        det *= m[col][col]
        for r in range(col + 1, n):
            factor = m[r][col] / m[col][col]
            if factor:
                for c in range(col, n):
                    m[r][c] -= factor * m[col][c]
    return det


def _rational_coeffs(f: UniPoly, point: dict[str, Fraction]) -> list[Fraction]:
    """Coefficients of ``f`` at ``point``, highest degree first."""
    return [c.evaluate(point) for c in reversed(f.coefficients())]


def rational_resultant(f: list[Fraction], g: list[Fraction]) -> Fraction:
    n, m = len(f) - 1, len(g) - 1
    size = n + m
    if size == 0:
        return Fraction(1)
    rows = [[Fraction(0)] * i + f + [Fraction(0)] * (size - n - 1 - i) for i in range(m)]
    rows += [[Fraction(0)] * j + g + [Fraction(0)] * (size - m - 1 - j) for j in range(n)]
    return rational_det(rows)


def _check_point(witness: NonvanishingWitness) -> bool:
    try:
        value = witness.polynomial.evaluate(witness.point)
    except DomainError:
        return False
    return value == witness.value and value != 0


def check_resultant(w: ResultantWitness) -> bool:
    total = w.content * w.core
    for factor, k in w.stripped:
        total = total * factor**k
    if total != w.resultant.numerator:
        logger.debug("Resultant split does not reproduce the numerator")
        return False
    if w.nonvanishing is None:
        return True
    if w.nonvanishing.polynomial != w.core or not _check_point(w.nonvanishing):
        logger.debug("Core does not take the recorded value")
        return False
    point = w.nonvanishing.point
    try:
        fc, gc = _rational_coeffs(w.f, point), _rational_coeffs(w.g, point)
        expected = w.resultant.evaluate(point)
    except DomainError:
        return False
    if fc[0] and gc[0] and rational_resultant(fc, gc) != expected:
        logger.debug("Sylvester determinant at %s disagrees with the resultant", point)
        return False
    return expected != 0


def check_nilpotent(w: NilpotentWitness) -> bool:
    if w.power < 1 or not w.element.rem(w.modulus):
        return False
    return not (w.element**w.power).rem(w.modulus)


def check_summand(w: SummandWitness) -> bool:
    return (
        w.part * w.rest == w.f
        and w.u * w.part + w.v * w.rest == 1
        and w.p * w.part + w.r * w.part.derivative() == 1
    )


def check_idempotents(w: IdempotentWitness) -> bool:
    f = w.modulus
    e1, e2 = w.e1, w.e2
    return (
        w.factors[0] * w.factors[1] == f
        and (e1 + e2 - 1).rem(f).is_zero()
        and (e1 * e2).rem(f).is_zero()
        and (e1 * e1 - e1).rem(f).is_zero()
        and (e2 * e2 - e2).rem(f).is_zero()
    )


def check_membership(w: MembershipWitness) -> bool:
    total = MPoly.zero(w.target.system)
    for m, g in zip(w.multipliers, w.generators, strict=True):
        total = total + m * g
    return total == w.target


def check_trace(w: TraceFormWitness, degenerate: bool) -> bool:
    if degenerate:
        return w.determinant.is_zero()
    if w.nonvanishing is None or not _check_point(w.nonvanishing):
        return False
    point = w.nonvanishing.point
    try:
        rows = [[c.evaluate(point) for c in row] for row in w.gram]
        expected = w.determinant.evaluate(point)
    except DomainError:
        return False
    return rational_det(rows) == expected != 0


def verify_certificate(cert: Certificate) -> bool:
    """Every witness re-checks and the verdict is backed by the right witness."""
    checks: list[bool] = []
    if cert.resultant is not None:
        checks.append(check_resultant(cert.resultant))
    if cert.nilpotent is not None:
        checks.append(check_nilpotent(cert.nilpotent))
    if cert.summand is not None:
        checks.append(check_summand(cert.summand))
    if cert.idempotents is not None:
        checks.append(check_idempotents(cert.idempotents))
    checks.extend(check_membership(m) for m in cert.membership)
    if cert.trace is not None:
        checks.append(check_trace(cert.trace, cert.verdict is Verdict.NOT_SEMISIMPLE))
    checks.extend(verify_certificate(p) for p in cert.parts)
    if not all(checks):
        logger.info("Certificate for %s failed re-verification", cert.subject)
        return False
    return _backed(cert)


def _backed(cert: Certificate) -> bool:
    verdict = cert.verdict
    if verdict is Verdict.SEMISIMPLE:
        return any(
            w is not None and w.nonvanishing is not None for w in (cert.resultant, cert.trace)
        ) or any(p.verdict is Verdict.SEMISIMPLE for p in cert.parts)
    if verdict is Verdict.NOT_SEMISIMPLE:
        return (
            cert.nilpotent is not None
            or cert.trace is not None
            or any(p.verdict is Verdict.NOT_SEMISIMPLE for p in cert.parts)
        )
    if verdict is Verdict.CONTAINS_FIELD_SUMMAND:
        # a reduced algebra is a product of fields, so a semisimple part backs it too
        return cert.summand is not None or any(
            p.verdict in (Verdict.CONTAINS_FIELD_SUMMAND, Verdict.SEMISIMPLE, Verdict.RADICAL_IDEAL)
            for p in cert.parts
        )
    if verdict is Verdict.RADICAL_IDEAL:
        return len(cert.membership) == 2 and all(
            p.verdict is Verdict.SEMISIMPLE for p in cert.parts
        )
    return True
