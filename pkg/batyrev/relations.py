"""Multiplicative relations of the quantum homology ring.

For a primitive collection ``I`` with ``sum_{i in I} e_i = sum_{j in J} c_j e_j``
the d-vector is ``1`` on ``I``, ``-c_j`` on ``J`` and ``0`` elsewhere, and

    prod_{i in I} u_i = s^{sum d_k eta_k} q^{-sum d_k} prod_{m not in I} u_m^{-d_m}.

In the normalized generators ``v_i = s^{-eta_i} q u_i`` the same relation reads
``prod_{i in I} v_i = prod_{j in J} v_j^{c_j}``.
"""

from __future__ import annotations

import logging
from collections.abc import Mapping, Sequence
from dataclasses import dataclass
from fractions import Fraction
from typing import Any

from arith import LinearForm
from arith.linear import combine
from batyrev.errors import ConsistencyError
from batyrev.primitive import PrimitiveSet
from toric import MomentPolytope

logger = logging.getLogger(__name__)

# Real dimension of the manifold; the quantum product shifts degrees by -2n.
TOP_DEGREE = 4


@dataclass(frozen=True)
class QuantumRelation:
    indices: tuple[int, ...]
    d: tuple[int, ...]
    s_exponent: LinearForm
    q_exponent: int
    monomial: tuple[tuple[int, int], ...]

    def rhs_powers(self) -> dict[int, int]:
        return dict(self.monomial)

    def s_value(self, values: Mapping[str, Fraction]) -> Fraction:
        """The s-exponent as a number once the exponent symbols have values."""
        return self.s_exponent.evaluate(values)

    def degrees(self) -> tuple[int, int]:
        """Graded degrees of both sides (deg u = deg q = 2, deg s = 0, deg [M] = 4)."""
        lhs = _product_degree(len(self.indices))
        rhs = 2 * self.q_exponent + _product_degree(sum(k for _, k in self.monomial))
        return lhs, rhs

    def to_text(self) -> str:
        lhs = "*".join(f"u{i}" for i in self.indices)
        parts = []
        if self.s_exponent != 0:
            parts.append(f"s^({self.s_exponent})")
        if self.q_exponent:
            parts.append(f"q^{self.q_exponent}")
        parts.append(_monomial_text("u", self.monomial) or "[M]")
        return f"{lhs} = {' * '.join(parts)}"

    def normalized_text(self) -> str:
        lhs = "*".join(f"v{i}" for i in self.indices)
        return f"{lhs} = {_monomial_text('v', self.monomial) or '1'}"

    def to_json(self) -> dict[str, Any]:
        return {
            "pair": list(self.indices),
            "d": list(self.d),
            "s_exp": self.s_exponent.to_json(),
            "q_exp": self.q_exponent,
            "monomial": {f"u{m}": k for m, k in self.monomial},
        }

    @classmethod
    def from_json(cls, data: Mapping[str, Any]) -> QuantumRelation:
        monomial = tuple(
            sorted((int(name.lstrip("u")), int(k)) for name, k in data.get("monomial", {}).items())
        )
        return cls(
            tuple(int(i) for i in data["pair"]),
            tuple(int(x) for x in data["d"]),
            LinearForm.from_json(data["s_exp"]),
            int(data["q_exp"]),
            monomial,
        )


def _product_degree(k: int) -> int:
    """Degree of a quantum product of ``k`` classes of degree 2 (the unity when ``k = 0``)."""
    if k == 0:
        return TOP_DEGREE
    return 2 * k - TOP_DEGREE * (k - 1)


def _monomial_text(prefix: str, monomial: Sequence[tuple[int, int]]) -> str:
    return "*".join(f"{prefix}{m}" if k == 1 else f"{prefix}{m}^{k}" for m, k in monomial)


def mult_relation(ps: PrimitiveSet, polytope: MomentPolytope) -> QuantumRelation:
    """The relation of one primitive collection, with its graded degrees checked."""
    n = polytope.size
    d = [0] * n
    for i in ps.indices:
        d[i - 1] = 1
    for j, c in ps.as_dict().items():
        d[j - 1] = -c
    s_exp = combine(polytope.supports, d)
    rel = QuantumRelation(
        ps.indices,
        tuple(d),
        s_exp,
        -sum(d),
        tuple((m, -d[m - 1]) for m in range(1, n + 1) if m not in ps.indices and d[m - 1]),
    )
    lhs, rhs = rel.degrees()
    if lhs != rhs:
        raise ConsistencyError(f"Relation {rel.to_text()} has degrees {lhs} != {rhs}")
    logger.debug("Relation %s (d = %s)", rel.to_text(), list(d))
    return rel
