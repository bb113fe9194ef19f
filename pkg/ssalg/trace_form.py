"""Semi-simplicity from the trace form ``T(a, b) = tr(L_ab)`` (characteristic zero)."""

from __future__ import annotations

import logging

from sympy.polys.matrices import DomainMatrix

from arith import FieldElem
from config import settings
from ssalg.certificate import Certificate, TraceFormWitness, Verdict
from ssalg.errors import SizeError
from ssalg.fdalgebra import FDAlgebra
from ssalg.nonvanishing import nonvanishing_test

logger = logging.getLogger(__name__)


def gram_matrix(alg: FDAlgebra) -> tuple[tuple[FieldElem, ...], ...]:
    traces = [alg.trace(alg.basis(k)) for k in range(alg.dim)]
    rows = []
    for i in range(alg.dim):
        row = []
        for j in range(alg.dim):
            total = FieldElem.zero(alg.system)
            for c, t in zip(alg.table[i][j], traces):
                if c and t:
                    total = total + c * t
            row.append(total)
        rows.append(tuple(row))
    return tuple(rows)


def trace_form_semisimple(alg: FDAlgebra) -> Certificate:
    """Semisimple iff the trace form is nondegenerate."""
    if alg.dim > settings.trace_form_max_dim:
        raise SizeError(
            f"Algebra of dimension {alg.dim} exceeds the trace-form bound "
            f"{settings.trace_form_max_dim}"
        )
    gram = gram_matrix(alg)
    matrix = DomainMatrix(
        [[c.value for c in row] for row in gram], (alg.dim, alg.dim), alg.system.coeff_domain
    )
    det = FieldElem(alg.system, matrix.det())
    subject = "algebra on " + ", ".join(alg.labels)
    if not det:
        logger.info("Trace form of %s is degenerate", subject)
        return Certificate(
            Verdict.NOT_SEMISIMPLE, subject, trace=TraceFormWitness(gram, det, None)
        )
    point = nonvanishing_test(det)
    witness = TraceFormWitness(gram, det, point)
    if point is None:
        return Certificate(
            Verdict.INCONCLUSIVE, subject, trace=witness, note="no schedule point gave a nonzero value"
        )
    return Certificate(Verdict.SEMISIMPLE, subject, trace=witness)
