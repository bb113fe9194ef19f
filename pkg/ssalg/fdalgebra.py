"""Finite-dimensional commutative algebras given by structure constants."""

from __future__ import annotations

import logging
from collections.abc import Sequence
from dataclasses import dataclass
from itertools import product
from typing import Any

from arith import (
    ExponentParam,
    FieldElem,
    ParamSystem,
    UniPoly,
    UsageError,
    parse_field,
    parse_relation,
    parse_unipoly,
)
from config import settings

logger = logging.getLogger(__name__)

Coords = tuple[FieldElem, ...]
Table = tuple[tuple[Coords, ...], ...]


@dataclass(frozen=True)
class FDAlgebra:
    """Basis ``labels`` with ``e_i * e_j = sum(table[i][j][l] * e_l)``.

    ``modulus`` is set for quotients ``K[X]/(f)`` built on the monomial basis.
    ``odd_vanishing`` records whether the algebra comes from a space whose odd
    homology vanishes (``None`` when the question does not apply).
    """

    system: ParamSystem
    labels: tuple[str, ...]
    table: Table
    unity: Coords
    modulus: UniPoly | None = None
    odd_vanishing: bool | None = None

    def __post_init__(self) -> None:
        n = len(self.labels)
        if n == 0:
            raise UsageError("An algebra needs at least one basis element")
        if len(self.table) != n or any(len(row) != n for row in self.table):
            raise UsageError(f"Structure table is not {n}x{n}")
        if any(len(c) != n for row in self.table for c in row) or len(self.unity) != n:
            raise UsageError(f"Structure constants must have {n} coordinates")
        for i, j in product(range(n), repeat=2):
            if i < j and not _same(self.table[i][j], self.table[j][i]):
                raise UsageError(f"Not commutative: {self.labels[i]}*{self.labels[j]}")
        for i in range(n):
            if not _same(self.mul(self.unity, self.basis(i)), self.basis(i)):
                raise UsageError(f"Unity does not fix {self.labels[i]}")
        if n <= settings.associativity_check_max_dim:
            self._check_associative()

    def _check_associative(self) -> None:
        n = self.dim
        for i, j, k in product(range(n), repeat=3):
            if not (i <= j <= k):
                continue
            left = self.mul(self.table[i][j], self.basis(k))
            right = self.mul(self.basis(i), self.table[j][k])
            if not _same(left, right):
                raise UsageError(
                    f"Not associative on ({self.labels[i]}, {self.labels[j]}, {self.labels[k]})"
                )

    @property
    def dim(self) -> int:
        return len(self.labels)

    # -- elements ----------------------------------------------------------------

    def zero(self) -> Coords:
        return tuple(FieldElem.zero(self.system) for _ in self.labels)

    def basis(self, i: int) -> Coords:
        return tuple(
            FieldElem.one(self.system) if k == i else FieldElem.zero(self.system)
            for k in range(self.dim)
        )

    def element(self, coords: Sequence[Any]) -> Coords:
        if len(coords) != self.dim:
            raise UsageError(f"Expected {self.dim} coordinates, got {len(coords)}")
        unit = FieldElem.one(self.system)
        return tuple(unit * c for c in coords)

    def mul(self, a: Coords, b: Coords) -> Coords:
        field = self.system.coeff_field
        acc = [field.zero] * self.dim
        for i, ai in enumerate(a):
            if not ai.value:
                continue
            for j, bj in enumerate(b):
                if not bj.value:
                    continue
                w = ai.value * bj.value
                for k, c in enumerate(self.table[i][j]):
                    if c.value:
                        acc[k] += w * c.value
        return tuple(FieldElem(self.system, v) for v in acc)

    def add(self, a: Coords, b: Coords) -> Coords:
        return tuple(x + y for x, y in zip(a, b, strict=True))

    def power(self, a: Coords, k: int) -> Coords:
        if k < 0:
            raise UsageError("Negative powers are not defined in a general algebra")
        acc = self.unity
        for _ in range(k):
            acc = self.mul(acc, a)
        return acc

    def is_zero(self, a: Coords) -> bool:
        return not any(c for c in a)

    def multiplication_matrix(self, a: Coords) -> list[list[FieldElem]]:
        """Matrix of ``x -> a*x``; column ``j`` holds ``a * e_j``."""
        cols = [self.mul(a, self.basis(j)) for j in range(self.dim)]
        return [[cols[j][i] for j in range(self.dim)] for i in range(self.dim)]

    def trace(self, a: Coords) -> FieldElem:
        total = FieldElem.zero(self.system)
        for j in range(self.dim):
            total = total + self.mul(a, self.basis(j))[j]
        return total

    # -- quotient helpers ----------------------------------------------------------

    def _require_modulus(self) -> UniPoly:
        if self.modulus is None:
            raise UsageError("Algebra is not presented as a univariate quotient")
        return self.modulus

    def from_poly(self, p: UniPoly) -> Coords:
        f = self._require_modulus()
        r = p.rem(f)
        return tuple(r.coeff(k) for k in range(self.dim))

    def to_poly(self, a: Coords) -> UniPoly:
        f = self._require_modulus()
        return UniPoly.from_coefficients(f.system, f.var, list(a))

    def relabeled(self, order: Sequence[int]) -> FDAlgebra:
        """Same algebra with basis ``e'_k = e_{order[k]}``."""
        if sorted(order) != list(range(self.dim)):
            raise UsageError(f"{list(order)} is not a permutation of the basis")
        inv = {old: new for new, old in enumerate(order)}

        def move(c: Coords) -> Coords:
            out = [c[0]] * self.dim
            for old, value in enumerate(c):
                out[inv[old]] = value
            return tuple(out)

        table = tuple(
            tuple(move(self.table[order[i]][order[j]]) for j in range(self.dim))
            for i in range(self.dim)
        )
        return FDAlgebra(
            self.system,
            tuple(self.labels[k] for k in order),
            table,
            move(self.unity),
            None,
            self.odd_vanishing,
        )

    def same_constants(self, other: FDAlgebra) -> bool:
        return (
            self.dim == other.dim
            and all(
                _same(self.table[i][j], other.table[i][j])
                for i, j in product(range(self.dim), repeat=2)
            )
            and _same(self.unity, other.unity)
        )

    # -- serialization -----------------------------------------------------------

    def to_json(self) -> dict[str, Any]:
        system = self.system
        out: dict[str, Any] = {
            "params": [p.name for p in system.params[1:]],
            "base_root": system.base_root,
            "relations": [r.text for r in system.relations if r.text],
        }
        if self.modulus is not None:
            out["variable"] = self.modulus.var
            out["quotient"] = self.modulus.to_text()
        out["basis"] = list(self.labels)
        out["table"] = [[[c.to_text() for c in cell] for cell in row] for row in self.table]
        out["unity"] = [c.to_text() for c in self.unity]
        if self.odd_vanishing is not None:
            out["odd_vanishing"] = self.odd_vanishing
        return out

    @classmethod
    def from_json(cls, data: dict[str, Any]) -> FDAlgebra:
        """Read either a full structure table or ``{"variable", "quotient"}``."""
        params = tuple(ExponentParam(str(n)) for n in data.get("params", []))
        generators = (str(data["variable"]),) if "quotient" in data else ()
        system = ParamSystem(params, generators, (), int(data.get("base_root", 1)))
        for text in data.get("relations", []):
            system = system.with_relations([parse_relation(str(text), system)])
        odd = data.get("odd_vanishing")
        if "quotient" in data:
            f = parse_unipoly(str(data["quotient"]), system, generators[0])
            return univariate_quotient(f, odd_vanishing=odd)
        try:
            labels = tuple(str(x) for x in data["basis"])
            table = tuple(
                tuple(tuple(parse_field(str(c), system) for c in cell) for cell in row)
                for row in data["table"]
            )
            unity = tuple(parse_field(str(c), system) for c in data["unity"])
        except KeyError as e:
            raise UsageError(f"Algebra JSON is missing {e.args[0]!r}") from None
        return cls(system, labels, table, unity, None, odd)


def _same(a: Coords, b: Coords) -> bool:
    return all(not (x.value - y.value) for x, y in zip(a, b, strict=True))


def univariate_quotient(f: UniPoly, odd_vanishing: bool | None = None) -> FDAlgebra:
    """``K[X]/(f)`` on the basis ``1, X, ..., X^(d-1)``."""
    if not f or f.degree() < 1:
        raise UsageError(f"Quotient by {f.to_text()} needs a polynomial of degree at least 1")
    d = f.degree()
    var = f.var
    x = UniPoly.x(f.system, var)
    powers = [(x**k).rem(f) for k in range(2 * d - 1)]
    table = tuple(
        tuple(tuple(powers[i + j].coeff(k) for k in range(d)) for j in range(d))
        for i in range(d)
    )
    labels = tuple("1" if k == 0 else (var if k == 1 else f"{var}^{k}") for k in range(d))
    unity = tuple(
        FieldElem.one(f.system) if k == 0 else FieldElem.zero(f.system) for k in range(d)
    )
    logger.debug("Quotient algebra of dimension %d by %s", d, f.to_text())
    return FDAlgebra(f.system, labels, table, unity, f, odd_vanishing)
