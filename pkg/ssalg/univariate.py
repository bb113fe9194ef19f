"""Semi-simplicity, nilpotents and field summands of ``K[X]/(f)``."""

from __future__ import annotations

import logging
from collections.abc import Iterable

from arith import (
    FieldElem,
    MPoly,
    UniPoly,
    UsageError,
    bezout,
    resultant_uni,
    squarefree_decomposition,
)
from ssalg.certificate import (
    Certificate,
    NilpotentWitness,
    ResultantWitness,
    SummandWitness,
    Verdict,
)
from ssalg.crt import crt_idempotents
from ssalg.nonvanishing import nonvanishing_test, strip_nonzero

logger = logging.getLogger(__name__)


def _require_positive_degree(f: UniPoly) -> None:
    if not f or f.degree() < 1:
        raise UsageError(f"Expected a polynomial of degree at least 1, got {f.to_text()}")


def resultant_witness(
    f: UniPoly, g: UniPoly, resultant: FieldElem, avoid: Iterable[MPoly] = ()
) -> ResultantWitness:
    """Strip the declared nonzero factors from ``resultant`` and look for a nonzero value."""
    loci = tuple(avoid)
    content, stripped, core = strip_nonzero(resultant.numerator, loci)
    point = nonvanishing_test(core, avoid=loci)
    return ResultantWitness(f, g, resultant, content, stripped, core, point)


def nilpotent_witness(f: UniPoly) -> NilpotentWitness | None:
    """The radical of ``f`` and the least power that vanishes modulo ``f``.

    ``None`` when ``f`` is squarefree.
    """
    _require_positive_degree(f)
    decomposition = squarefree_decomposition(f)
    if decomposition.is_squarefree:
        return None
    m = decomposition.radical()
    t = max(k for _, k in decomposition.factors)
    if (m**t).rem(f) or not (m ** (t - 1)).rem(f):
        raise ArithmeticError(f"Radical {m.to_text()} does not vanish first at power {t}")
    return NilpotentWitness(f, m, t)


def is_semisimple_univariate(f: UniPoly, avoid: Iterable[MPoly] = ()) -> Certificate:
    """Semisimple iff ``Res(f, f')`` is nonzero; certified by a specialization."""
    _require_positive_degree(f)
    df = f.derivative()
    value = resultant_uni(f, df)
    if not value:
        witness = nilpotent_witness(f)
        logger.info("Res(f, f') vanishes: %s is not squarefree", f.to_text())
        return Certificate(Verdict.NOT_SEMISIMPLE, f.to_text(), nilpotent=witness)
    resultant = resultant_witness(f, df, value, avoid)
    if resultant.nonvanishing is None:
        logger.warning("Could not certify Res(f, f') != 0 for %s", f.to_text())
        return Certificate(
            Verdict.INCONCLUSIVE,
            f.to_text(),
            resultant=resultant,
            note="no schedule point gave a nonzero value",
        )
    return Certificate(Verdict.SEMISIMPLE, f.to_text(), resultant=resultant)


def field_summand_certificate(f: UniPoly) -> Certificate:
    """Split off the multiplicity-one part ``a1``; ``K[X]/(a1)`` is a product of fields."""
    _require_positive_degree(f)
    decomposition = squarefree_decomposition(f)
    part = decomposition.part(1)
    if part is None or part.degree() < 1:
        return Certificate(
            Verdict.INCONCLUSIVE,
            f.to_text(),
            note="no simple factor; a field summand may still exist",
        )
    rest = f.exquo(part)
    u, v, d = bezout(part, rest)
    p, r, d1 = bezout(part, part.derivative())
    if d.degree() != 0 or d1.degree() != 0:
        raise ArithmeticError(f"Simple part {part.to_text()} is not coprime to its cofactor")
    inv, inv1 = d.lc().inverse(), d1.lc().inverse()
    summand = SummandWitness(f, part, rest, u * inv, v * inv, p * inv1, r * inv1)
    idempotents = crt_idempotents(part, rest) if rest.degree() > 0 else None
    note = "" if rest.degree() > 0 else "squarefree: the whole quotient is a product of fields"
    return Certificate(
        Verdict.CONTAINS_FIELD_SUMMAND,
        f.to_text(),
        summand=summand,
        idempotents=idempotents,
        note=note,
    )
