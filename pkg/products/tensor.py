"""Tensor products of presented algebras over a merged coefficient field.

Both factors are extended to a common parameter system: the base ``s`` is
shared (with the least common base root), identical parameters are shared,
and any other clash is resolved by renaming the right factor's parameter.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, replace
from itertools import product
from math import lcm

from arith import (
    DomainError,
    FieldElem,
    MonomialRelation,
    MPoly,
    ParamSystem,
    UniPoly,
    UsageError,
)
from arith.params import BASE
from ssalg import FDAlgebra, univariate_quotient

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class MergedParamSystem:
    """``system`` contains both factors; ``*_rename`` and ``*_scale`` embed them."""

    system: ParamSystem
    left: ParamSystem
    right: ParamSystem
    left_rename: dict[str, str]
    right_rename: dict[str, str]
    left_scale: int
    right_scale: int

    def embed_left(self, c: FieldElem) -> FieldElem:
        return c.in_system(self.system, self.left_rename, self.left_scale)

    def embed_right(self, c: FieldElem) -> FieldElem:
        return c.in_system(self.system, self.right_rename, self.right_scale)


def _fresh(name: str, taken: set[str]) -> str:
    k = 2
    while f"{name}_{k}" in taken:
        k += 1
    return f"{name}_{k}"


def _move_relation(
    rel: MonomialRelation, rename: dict[str, str], scale: int
) -> MonomialRelation:
    monomial = tuple(
        (rename.get(n, n), e * scale if n == BASE else e) for n, e in rel.monomial
    )
    return MonomialRelation(rename.get(rel.target, rel.target), monomial, rel.text)


def merge_systems(
    left: ParamSystem, right: ParamSystem, rename: bool = True
) -> MergedParamSystem:
    """Union of the parameters of ``left`` and ``right`` (generators are dropped)."""
    base_root = lcm(left.base_root, right.base_root)
    left_params = list(left.params[1:])
    taken = {p.name for p in left_params} | {BASE} | set(left.generators) | set(right.generators)
    by_name = {p.name: p for p in left_params}
    right_rename: dict[str, str] = {}
    params = list(left_params)
    for p in right.params[1:]:
        if p.name in by_name and by_name[p.name] == p:
            continue
        if p.name in taken:
            if not rename:
                raise UsageError(f"Parameter {p.name!r} means different things in the two factors")
            new = _fresh(p.name, taken)
            right_rename[p.name] = new
            p = replace(p, name=new)
        taken.add(p.name)
        params.append(p)
    left_scale = base_root // left.base_root
    right_scale = base_root // right.base_root
    system = ParamSystem(tuple(params), (), (), base_root)
    relations = [_move_relation(r, {}, left_scale) for r in left.relations]
    relations += [_move_relation(r, right_rename, right_scale) for r in right.relations]
    if relations:
        system = system.with_relations(relations)
    if right_rename:
        logger.info("Renamed right-factor parameters: %s", right_rename)
    return MergedParamSystem(
        system, left, right, {}, right_rename, left_scale, right_scale
    )


@dataclass(frozen=True)
class TensorProduct:
    """``left (x) right``; basis element ``(i, k)`` sits at index ``i * dim(right) + k``."""

    algebra: FDAlgebra
    left: FDAlgebra
    right: FDAlgebra
    merged: MergedParamSystem

    def index(self, i: int, k: int) -> int:
        return i * self.right.dim + k

    def pure(
        self, a: tuple[FieldElem, ...] | None = None, b: tuple[FieldElem, ...] | None = None
    ) -> tuple[FieldElem, ...]:
        """``a (x) b`` in the tensor; a missing factor means the unity."""
        a = self.left.unity if a is None else a
        b = self.right.unity if b is None else b
        left = [self.merged.embed_left(c) for c in a]
        right = [self.merged.embed_right(c) for c in b]
        return tuple(x * y for x, y in product(left, right))


def tensor_product(alg_a: FDAlgebra, alg_b: FDAlgebra, rename: bool = True) -> TensorProduct:
    merged = merge_systems(alg_a.system, alg_b.system, rename)
    table_a = [[[merged.embed_left(c) for c in cell] for cell in row] for row in alg_a.table]
    table_b = [[[merged.embed_right(c) for c in cell] for cell in row] for row in alg_b.table]
    pairs = list(product(range(alg_a.dim), range(alg_b.dim)))
    table = tuple(
        tuple(
            tuple(x * y for x, y in product(table_a[i][j], table_b[p][r]))
            for (j, r) in pairs
        )
        for (i, p) in pairs
    )
    unity_a = [merged.embed_left(c) for c in alg_a.unity]
    unity_b = [merged.embed_right(c) for c in alg_b.unity]
    unity = tuple(x * y for x, y in product(unity_a, unity_b))
    labels = tuple(f"{p}*{q}" for p, q in product(alg_a.labels, alg_b.labels))
    if alg_a.odd_vanishing is None or alg_b.odd_vanishing is None:
        odd = None
    else:
        odd = alg_a.odd_vanishing and alg_b.odd_vanishing
    algebra = FDAlgebra(merged.system, labels, table, unity, None, odd)
    logger.debug("Tensor product of dimension %d", algebra.dim)
    return TensorProduct(algebra, alg_a, alg_b, merged)


def tensor(alg_a: FDAlgebra, alg_b: FDAlgebra, rename: bool = True) -> FDAlgebra:
    """Structure constants ``c_{(i,k),(j,l)} = c^A_{ij} (x) c^B_{kl}``."""
    return tensor_product(alg_a, alg_b, rename).algebra


def ideal_as_tensor(
    generators: tuple[MPoly, ...], odd_vanishing: bool | None = None
) -> TensorProduct | None:
    """``K[X, Y]/(f(X), g(Y))`` as ``K[X]/(f) (x) K[Y]/(g)``; ``None`` if the ideal does not split."""
    if len(generators) != 2:
        return None
    system = generators[0].system
    if len(system.generators) != 2:
        return None
    quotients = []
    for var in system.generators:
        own = [
            g
            for g in generators
            if var in g.variables_used()
            and not any(o in g.variables_used() for o in system.generators if o != var)
        ]
        if len(own) != 1:
            return None
        try:
            quotients.append(univariate_quotient(UniPoly.from_mpoly(own[0], var), odd_vanishing))
        except (UsageError, DomainError):
            return None
    return tensor_product(quotients[0], quotients[1])
