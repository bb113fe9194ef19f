"""Chinese-remainder idempotents for a coprime split of a univariate quotient."""

from __future__ import annotations

import logging

from arith import DomainError, UniPoly, bezout
from ssalg.certificate import IdempotentWitness

logger = logging.getLogger(__name__)


def crt_idempotents(g: UniPoly, h: UniPoly) -> IdempotentWitness:
    """Idempotents of ``K[X]/(g*h) = K[X]/(g) + K[X]/(h)`` for coprime ``g``, ``h``.

    ``e1`` is 1 on the ``g`` component and 0 on the ``h`` component.
    """
    u, v, d = bezout(g, h)
    if d.degree() != 0:
        raise DomainError(f"{g.to_text()} and {h.to_text()} share the factor {d.to_text()}")
    d0 = d.lc()
    f = g * h
    e1 = (v * h * d0.inverse()).rem(f)
    e2 = (u * g * d0.inverse()).rem(f)
    one = UniPoly.one(f.system, f.var)
    checks = {
        "e1 + e2 = 1": (e1 + e2 - one).rem(f),
        "e1 * e2 = 0": (e1 * e2).rem(f),
        "e1^2 = e1": (e1 * e1 - e1).rem(f),
        "e2^2 = e2": (e2 * e2 - e2).rem(f),
    }
    failed = [name for name, r in checks.items() if r]
    if failed:
        raise ArithmeticError(f"Idempotent identities failed: {', '.join(failed)}")
    logger.debug("CRT idempotents for %s = (%s)(%s)", f.to_text(), g.to_text(), h.to_text())
    return IdempotentWitness(f, (g, h), e1, e2)
