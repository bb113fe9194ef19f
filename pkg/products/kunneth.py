"""Semi-simplicity and field summands of tensor products, checked on the product itself."""

from __future__ import annotations

import logging

from arith import UsageError
from config import settings
from ssalg import (
    Certificate,
    FDAlgebra,
    SizeError,
    Verdict,
    field_summand_certificate,
    is_semisimple_univariate,
    nilpotent_witness,
    trace_form_semisimple,
)
from products.tensor import TensorProduct, tensor_product

logger = logging.getLogger(__name__)


def algebra_certificate(alg: FDAlgebra) -> Certificate:
    """Univariate route for quotients, trace form otherwise.

    A non-squarefree quotient whose simple part is nontrivial is reported as
    containing a field summand; the nilpotent witness rides along as a part.
    """
    if alg.modulus is None:
        return trace_form_semisimple(alg)
    cert = is_semisimple_univariate(alg.modulus)
    if cert.verdict is not Verdict.NOT_SEMISIMPLE:
        return cert
    summand = field_summand_certificate(alg.modulus)
    if summand.verdict is Verdict.CONTAINS_FIELD_SUMMAND:
        return Certificate(
            Verdict.CONTAINS_FIELD_SUMMAND,
            cert.subject,
            summand=summand.summand,
            idempotents=summand.idempotents,
            parts=(cert,),
            note="not semisimple",
        )
    return cert


def _expected(a: Verdict, b: Verdict) -> Verdict | None:
    if a is Verdict.SEMISIMPLE and b is Verdict.SEMISIMPLE:
        return Verdict.SEMISIMPLE
    if Verdict.INCONCLUSIVE in (a, b):
        return None
    if {a, b} == {Verdict.CONTAINS_FIELD_SUMMAND, Verdict.SEMISIMPLE}:
        return Verdict.CONTAINS_FIELD_SUMMAND
    return Verdict.NOT_SEMISIMPLE


def transported_nilpotent(t: TensorProduct) -> tuple[int, bool] | None:
    """Power at which ``x (x) 1`` vanishes for the left factor's nilpotent ``x``."""
    for side, alg in (("left", t.left), ("right", t.right)):
        if alg.modulus is None:
            continue
        witness = nilpotent_witness(alg.modulus)
        if witness is None:
            continue
        coords = alg.from_poly(witness.element)
        pure = t.pure(a=coords) if side == "left" else t.pure(b=coords)
        vanishes = t.algebra.is_zero(t.algebra.power(pure, witness.power))
        return witness.power, vanishes and not t.algebra.is_zero(pure)
    return None


def transported_idempotent(t: TensorProduct, cert: Certificate, side: str) -> bool:
    """Whether ``e (x) 1`` (or ``1 (x) e``) is a nontrivial idempotent of the product."""
    if cert.idempotents is None:
        return False
    alg = t.left if side == "left" else t.right
    coords = alg.from_poly(cert.idempotents.e1)
    e = t.pure(a=coords) if side == "left" else t.pure(b=coords)
    product = t.algebra
    square = product.mul(e, e)
    diff = tuple(x - y for x, y in zip(square, e))
    return (
        product.is_zero(diff)
        and not product.is_zero(e)
        and not product.is_zero(tuple(u - x for u, x in zip(product.unity, e)))
    )


def kunneth_check(
    alg_a: FDAlgebra,
    alg_b: FDAlgebra,
    cert_a: Certificate | None = None,
    cert_b: Certificate | None = None,
) -> Certificate:
    """Certify the tensor product and compare with what the factor verdicts predict."""
    if alg_a.dim * alg_b.dim > settings.trace_form_max_dim:
        raise SizeError(
            f"Tensor of dimension {alg_a.dim * alg_b.dim} exceeds the bound "
            f"{settings.trace_form_max_dim}"
        )
    if False in (alg_a.odd_vanishing, alg_b.odd_vanishing):
        raise UsageError("Product statements need factors with vanishing odd homology")
    cert_a = cert_a or algebra_certificate(alg_a)
    cert_b = cert_b or algebra_certificate(alg_b)
    t = tensor_product(alg_a, alg_b)
    traced = trace_form_semisimple(t.algebra)
    expected = _expected(cert_a.verdict, cert_b.verdict)

    verdict = traced.verdict
    notes = []
    if verdict is Verdict.NOT_SEMISIMPLE:
        transport = transported_nilpotent(t)
        if transport is not None:
            notes.append(f"nilpotent transported, vanishes at power {transport[0]}: {transport[1]}")
        if expected is Verdict.CONTAINS_FIELD_SUMMAND:
            side = "left" if cert_a.verdict is Verdict.CONTAINS_FIELD_SUMMAND else "right"
            summand_cert = cert_a if side == "left" else cert_b
            if transported_idempotent(t, summand_cert, side):
                verdict = Verdict.CONTAINS_FIELD_SUMMAND
                notes.append(f"idempotent of the {side} field summand is an idempotent of the product")

    consistent = expected is None or expected is verdict
    notes.append("consistent with factor verdicts" if consistent else "INCONSISTENT with factor verdicts")
    if not consistent:
        logger.warning(
            "Product verdict %s disagrees with factors %s, %s",
            verdict.value,
            cert_a.verdict.value,
            cert_b.verdict.value,
        )
    return Certificate(
        verdict,
        "tensor of " + cert_a.subject + " and " + cert_b.subject,
        parts=(cert_a, cert_b, traced),
        note="; ".join(notes),
    )
