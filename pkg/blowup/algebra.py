"""The even part of quantum homology of a one-point blow-up.

With ``A`` the class of the exceptional divisor times ``q`` and ``B`` the
point class times ``q^n``, the relevant subalgebra is

    V = K[A] / (A^2 (A^(n-1) - z)),    B = A z - A^n,

where ``z`` stands for ``s^(-delta)`` and ``delta`` is the symplectic area
of a line in the exceptional divisor. ``V`` has a field summand (from the
simple factor ``A^(n-1) - z``) and a nilpotent (``B``, with ``B^2 = 0``).
"""

from __future__ import annotations

import logging
from dataclasses import dataclass

from arith import ExponentParam, FieldElem, MPoly, ParamSystem, UniPoly
from config import settings
from ssalg import (
    Certificate,
    FDAlgebra,
    Verdict,
    field_summand_certificate,
    nilpotent_witness,
    univariate_quotient,
)
from toric import ParameterError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class BlowupAlgebra:
    """``V`` with its distinguished elements; ``delta`` names the exponent ``z`` stands for."""

    n: int
    delta: str
    quotient: UniPoly
    a: UniPoly
    b: UniPoly
    z: UniPoly

    @property
    def system(self) -> ParamSystem:
        return self.quotient.system

    def reduce(self, p: UniPoly) -> UniPoly:
        return p.rem(self.quotient)

    def is_zero(self, p: UniPoly) -> bool:
        return self.reduce(p).is_zero()

    def algebra(self) -> FDAlgebra:
        return univariate_quotient(self.quotient)


def build(n: int, delta: str = "delta") -> BlowupAlgebra:
    """``V`` for the blow-up of a ``2n``-dimensional manifold; needs ``n >= 2``."""
    if n < 2:
        raise ParameterError(f"Blow-up algebra needs n >= 2, got n = {n}")
    if n > settings.blowup_max_n:
        raise ParameterError(f"n = {n} exceeds the configured bound {settings.blowup_max_n}")
    system = ParamSystem((ExponentParam("z"),), ("A",))
    a = UniPoly.x(system, "A")
    z = UniPoly.from_coefficients(system, "A", [FieldElem.from_mpoly(MPoly.variable(system, "z"))])
    quotient = a**2 * (a ** (n - 1) - z)
    b = a * z - a**n
    if (a**n - (-b + a * z)).rem(quotient) or (a * b).rem(quotient):
        raise ArithmeticError("Defining relations A^n = -B + Az and A*B = 0 fail")
    logger.debug("Blow-up algebra for n=%d: %s", n, quotient.to_text())
    return BlowupAlgebra(n, delta, quotient, a, b, z)


def verify_E_products(alg: BlowupAlgebra) -> bool:  # noqa: N802
    """Products of powers of the exceptional class.

    ``A^i * A^(n-i) = -B + A z`` for ``0 < i < n``, and ``A^i * A^j = A^(i+j)``
    with no reduction when ``i + j < n``.
    """
    a, b, z, n = alg.a, alg.b, alg.z, alg.n
    top = alg.reduce(-b + a * z)
    for i in range(1, n):
        if alg.reduce(a**i * a ** (n - i)) != top:
            logger.debug("A^%d * A^%d does not reduce to -B + Az", i, n - i)
            return False
    for i in range(1, n):
        for j in range(1, n - i):
            product = alg.reduce(a**i * a**j)
            if product != a ** (i + j):
                return False
    return True


@dataclass(frozen=True)
class SummandChecks:
    """Polynomial identities behind the field-summand argument."""

    idempotent_divisible_by_a2: bool
    b_kills_idempotent: bool
    b_in_complement: bool
    b_squared_zero: bool
    a_zero_divisor: bool

    def all(self) -> bool:
        return all(vars(self).values())


def a_is_zero_divisor(alg: BlowupAlgebra) -> bool:
    """``A * A (A^(n-1) - z) = 0`` in ``V`` with the second factor nonzero."""
    witness = alg.a * (alg.a ** (alg.n - 1) - alg.z)
    return not alg.is_zero(witness) and alg.is_zero(alg.a * witness)


def summand_checks(alg: BlowupAlgebra, cert: Certificate | None = None) -> SummandChecks:
    cert = cert or field_summand_certificate(alg.quotient)
    if cert.idempotents is None:
        raise ArithmeticError("Field-summand certificate carries no idempotents")
    e1, e2 = cert.idempotents.e1, cert.idempotents.e2
    a2 = alg.a**2
    return SummandChecks(
        idempotent_divisible_by_a2=a2.divides(e1),
        b_kills_idempotent=alg.is_zero(alg.b * e1),
        b_in_complement=alg.is_zero(alg.b * e2 - alg.b),
        b_squared_zero=alg.is_zero(alg.b * alg.b),
        a_zero_divisor=a_is_zero_divisor(alg),
    )


def analyze(alg: BlowupAlgebra) -> Certificate:
    """Not semisimple (``B`` is nilpotent) yet containing a field summand."""
    subject = alg.quotient.to_text()
    nilpotent = nilpotent_witness(alg.quotient)
    if nilpotent is None:
        raise ArithmeticError(f"{subject} came out squarefree")
    if nilpotent.element != -alg.b and nilpotent.element != alg.b:
        logger.warning("Nilpotent witness %s is not +-B", nilpotent.element.to_text())
    summand = field_summand_certificate(alg.quotient)
    checks = summand_checks(alg, summand)
    if not checks.all():
        failed = [k for k, v in vars(checks).items() if not v]
        raise ArithmeticError(f"Field-summand identities failed: {', '.join(failed)}")
    logger.info("Blow-up n=%d: nilpotent B and a field summand", alg.n)
    return Certificate(
        Verdict.NOT_SEMISIMPLE,
        subject,
        parts=(
            Certificate(Verdict.NOT_SEMISIMPLE, subject, nilpotent=nilpotent, note="B^2 = 0"),
            summand,
        ),
        note="field summand present, not semisimple",
    )
