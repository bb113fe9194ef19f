"""Eliminate one generator of a two-generator ideal with a resultant.

The resultant lies in the elimination ideal; the Sylvester cofactors certify
membership. Generators are units in the Laurent ring, so a monomial factor in
the surviving generator is divided out together with the cofactors.
"""

from __future__ import annotations

import logging

from arith import DomainError, MPoly, UniPoly, UsageError, resultant_with_cofactors
from ssalg.certificate import MembershipWitness

logger = logging.getLogger(__name__)


def survivor_of(poly: MPoly, eliminate: str) -> str:
    gens = poly.system.generators
    if len(gens) != 2 or eliminate not in gens:
        raise UsageError(f"Cannot eliminate {eliminate!r} from generators {gens}")
    return gens[1] if gens[0] == eliminate else gens[0]


def elimination_resultant(
    g1: MPoly, g2: MPoly, eliminate: str
) -> tuple[UniPoly, MembershipWitness]:
    """``Res_eliminate(g1, g2)`` as a polynomial in the other generator, with cofactors."""
    system = g1.system
    if g2.system != system:
        raise UsageError("Ideal generators belong to different systems")
    survivor = survivor_of(g1, eliminate)
    inner = system.with_generator_as_param(survivor)
    p1 = UniPoly.from_mpoly(g1.in_system(inner), eliminate)
    p2 = UniPoly.from_mpoly(g2.in_system(inner), eliminate)
    if p1.degree() < 0 or p2.degree() < 0 or max(p1.degree(), p2.degree()) < 1:
        raise UsageError(f"Generators must be nonzero and involve {eliminate!r}")
    value, u, v = resultant_with_cofactors(p1, p2)
    if not value:
        raise DomainError(f"Res_{eliminate} vanishes: the generators share a common factor")

    target = value.to_mpoly().in_system(system)
    m1 = u.to_mpoly().in_system(system)
    m2 = v.to_mpoly().in_system(system)
    if not target.is_term:
        content = tuple(-e for e in target.monomial_content())
        target, m1, m2 = target.mul_monom(content), m1.mul_monom(content), m2.mul_monom(content)
    witness = MembershipWitness(target, (g1, g2), (m1, m2), f"Res_{eliminate}")
    if not witness.holds():
        raise ArithmeticError(f"Membership identity for Res_{eliminate} failed")
    logger.info(
        "Eliminated %s: degree %d in %s", eliminate, target.degree(survivor), survivor
    )
    return UniPoly.from_mpoly(target, survivor), witness
