"""Checking that a monomial substitution carries one product table onto another.

For a monotone manifold with minimal Chern number ``N`` and monotonicity
constant ``kappa`` the quantum product can be written with a single formal
variable ``u`` (coefficient ``u^(-N j)`` on the degree-``j`` part) or with
``q`` and ``s`` (coefficient ``q^(-N j) s^(-kappa N j)``). The rewriting
``u -> q s^kappa`` maps the first onto the second.
"""

from __future__ import annotations

import logging
from collections.abc import Mapping
from fractions import Fraction
from itertools import product

from arith import ExponentParam, FieldElem, MPoly, ParamSystem, UsageError
from arith.params import BASE
from ssalg.fdalgebra import FDAlgebra

logger = logging.getLogger(__name__)


def projective_space_table(
    system: ParamSystem, n: int, correction: MPoly
) -> FDAlgebra:
    """``K[H]/(H^(n+1) - correction)`` on the basis ``1, H, ..., H^n``."""
    dim = n + 1
    one = FieldElem.one(system)
    zero = FieldElem.zero(system)
    c = FieldElem.from_mpoly(correction)
    table = []
    for i in range(dim):
        row = []
        for j in range(dim):
            k = i + j
            coords = [zero] * dim
            if k <= n:
                coords[k] = one
            else:
                coords[k - dim] = c
            row.append(tuple(coords))
        table.append(tuple(row))
    labels = tuple("1" if k == 0 else ("H" if k == 1 else f"H^{k}") for k in range(dim))
    unity = tuple(one if k == 0 else zero for k in range(dim))
    return FDAlgebra(system, labels, tuple(table), unity)


def toy_monotone_tables(
    n: int = 1, kappa: Fraction = Fraction(1, 2)
) -> tuple[FDAlgebra, FDAlgebra, dict[str, int]]:
    """``(star_u, star_qs, target)`` for projective ``n``-space with ``N = n + 1``.

    ``target`` is the monomial ``q s^kappa`` that ``u`` is replaced by.
    """
    if n < 1:
        raise UsageError(f"Projective space needs n >= 1, got {n}")
    kappa = Fraction(kappa)
    chern = n + 1
    system = ParamSystem(
        (ExponentParam("q"), ExponentParam("u")), (), (), kappa.denominator
    )
    s_power = int(kappa * system.base_root)
    star_u = projective_space_table(system, n, MPoly.monomial(system, {"u": -chern}))
    star_qs = projective_space_table(
        system, n, MPoly.monomial(system, {"q": -chern, BASE: -s_power * chern})
    )
    return star_u, star_qs, {"q": 1, BASE: s_power}


def check_substitution_homomorphism(
    source: FDAlgebra, target: FDAlgebra, var: str, monomial: Mapping[str, int]
) -> bool:
    """Whether substituting ``var -> monomial`` in every structure constant gives ``target``."""
    if source.dim != target.dim:
        raise UsageError(f"Tables of dimension {source.dim} and {target.dim} cannot match")
    if source.system != target.system:
        raise UsageError("Tables are over different parameter systems")
    for i, j in product(range(source.dim), repeat=2):
        for k, (a, b) in enumerate(zip(source.table[i][j], target.table[i][j])):
            if a.substitute_monomial(var, monomial) != b:
                logger.debug(
                    "Substitution fails on %s*%s, coordinate %s",
                    source.labels[i],
                    source.labels[j],
                    source.labels[k],
                )
                return False
    return all(
        a.substitute_monomial(var, monomial) == b for a, b in zip(source.unity, target.unity)
    )
