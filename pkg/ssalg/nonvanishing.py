"""Certify that a parameter polynomial is not identically zero by exhibiting a value.

The schedule is fixed: the all-ones point first, then points whose coordinates
are ``1 + 1/p`` for distinct primes ``p``. At ``s = 1`` every ``s^gamma`` is 1,
so a nonzero value at the all-ones point holds for every choice of exponents.
"""

from __future__ import annotations

import logging
from collections.abc import Iterable, Iterator
from fractions import Fraction

from sympy import prime

from arith import DomainError, FieldElem, MPoly, ParamSystem
from config import settings
from ssalg.certificate import NonvanishingWitness, WitnessKind

logger = logging.getLogger(__name__)


def schedule(system: ParamSystem, max_points: int | None = None) -> Iterator[tuple[dict[str, Fraction], WitnessKind]]:
    """The deterministic specialization points for ``system``'s active parameters."""
    names = system.active_params
    yield {n: Fraction(1) for n in names}, WitnessKind.UNIT
    count = settings.nonvanishing_max_points if max_points is None else max_points
    width = len(names)
    for j in range(1, count + 1):
        point = {n: 1 + Fraction(1, int(prime(j * width + k + 1))) for k, n in enumerate(names)}
        yield point, WitnessKind.GENERIC


def _value(poly: MPoly, point: dict[str, Fraction]) -> Fraction | None:
    try:
        return poly.evaluate(point)
    except DomainError:
        return None


def nonvanishing_test(
    h: MPoly | FieldElem,
    avoid: Iterable[MPoly] = (),
    max_points: int | None = None,
) -> NonvanishingWitness | None:
    """First schedule point where ``h`` is nonzero, or ``None``.

    ``None`` proves nothing. Points after the first skip every polynomial in
    ``avoid`` (declared nonzero loci) and the zeros of ``h``'s denominator.
    """
    if isinstance(h, FieldElem):
        numer, denom = h.numerator, h.denominator
    else:
        numer, denom = h, MPoly.one(h.system)
    if not numer:
        return None
    loci = [p for p in avoid if p]
    for point, kind in schedule(numer.system, max_points):
        if kind is WitnessKind.GENERIC:
            if any(_value(p, point) in (None, 0) for p in loci):
                continue
            if _value(denom, point) in (None, 0):
                continue
        value = _value(numer, point)
        if value:
            logger.debug("Nonzero at %s point (value %s)", kind.value, value)
            return NonvanishingWitness(numer, point, value, kind)
    logger.info("No nonvanishing point found for %s", numer.to_text())
    return None


def strip_nonzero(
    poly: MPoly, factors: Iterable[MPoly] = ()
) -> tuple[MPoly, tuple[tuple[MPoly, int], ...], MPoly]:
    """Split ``poly = content * prod(factor^k) * core``.

    ``content`` is the monomial content; each declared nonzero factor is divided
    out as often as it divides exactly.
    """
    content = MPoly.from_terms(poly.system, {poly.monomial_content(): 1}) if poly else MPoly.one(poly.system)
    core = poly.primitive_part()
    stripped: list[tuple[MPoly, int]] = []
    for factor in factors:
        if not factor or factor.is_term:
            continue
        factor = factor.primitive_part()
        k = 0
        while core and not core.is_constant and factor.divides(core):
            core = core.exquo(factor)
            k += 1
        if k:
            stripped.append((factor, k))
    return content, tuple(stripped), core
