"""The quantum homology presentation of a toric Fano surface."""

from __future__ import annotations

import logging
from collections.abc import Mapping
from dataclasses import dataclass
from typing import Any

from arith import ExponentParam, LinearForm, format_rational, parse_rational
from batyrev.primitive import cp2_collection, primitive_sets
from batyrev.relations import QuantumRelation, mult_relation
from toric import MomentPolytope
from toric.polytope import Vector

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class QHPresentation:
    """Generators ``u_1..u_l`` with additive rows and Batyrev's multiplicative relations.

    ``deg u_i = deg q = 2``, ``deg s = 0`` and the fundamental class ``[M]`` is
    the unity. The normalized generators are ``v_i = s^{-eta_i} q u_i``.
    """

    size: int
    normals: tuple[Vector, ...]
    supports: tuple[LinearForm, ...]
    params: tuple[ExponentParam, ...]
    relations: tuple[QuantumRelation, ...]
    unique_d: bool = True

    @property
    def generators(self) -> tuple[str, ...]:
        return tuple(f"u{i}" for i in range(1, self.size + 1))

    @property
    def additive(self) -> tuple[tuple[int, ...], tuple[int, ...]]:
        """Rows ``(alpha_1..alpha_l)`` and ``(beta_1..beta_l)``."""
        return tuple(e[0] for e in self.normals), tuple(e[1] for e in self.normals)

    def additive_texts(self) -> list[str]:
        return [_linear_text(row) + " = 0" for row in self.additive]

    def relation_texts(self) -> list[str]:
        return [r.to_text() for r in self.relations]

    def normalized_texts(self) -> list[str]:
        return [r.normalized_text() for r in self.relations]

    def relation(self, *indices: int) -> QuantumRelation:
        for r in self.relations:
            if r.indices == tuple(indices):
                return r
        raise KeyError(f"No relation for {set(indices)}")

    def to_json(self) -> dict[str, Any]:
        return {
            "generators": list(self.generators),
            "normals": [list(e) for e in self.normals],
            "supports": [eta.to_json() for eta in self.supports],
            "params": [
                {
                    "name": p.name,
                    "label": p.label,
                    "value": None if p.value is None else format_rational(p.value),
                }
                for p in self.params
            ],
            "additive": [list(row) for row in self.additive],
            "relations": [r.to_json() for r in self.relations],
            "unique_d": self.unique_d,
        }

    @classmethod
    def from_json(cls, data: Mapping[str, Any]) -> QHPresentation:
        normals = tuple((int(e[0]), int(e[1])) for e in data["normals"])
        params = tuple(
            ExponentParam(
                p["name"],
                p.get("label"),
                None if p.get("value") is None else parse_rational(p["value"]),
            )
            for p in data.get("params", [])
        )
        return cls(
            len(normals),
            normals,
            tuple(LinearForm.from_json(eta) for eta in data["supports"]),
            params,
            tuple(QuantumRelation.from_json(r) for r in data["relations"]),
            bool(data.get("unique_d", True)),
        )


def _linear_text(row: tuple[int, ...]) -> str:
    parts: list[str] = []
    for i, a in enumerate(row, start=1):
        if not a:
            continue
        term = f"u{i}" if abs(a) == 1 else f"{abs(a)}*u{i}"
        if not parts:
            parts.append(term if a > 0 else f"-{term}")
        else:
            parts.append(f"+ {term}" if a > 0 else f"- {term}")
    return " ".join(parts) or "0"


def presentation(polytope: MomentPolytope, unique_d: bool = True) -> QHPresentation:
    """Run the recipe on a Fano polygon.

    The triangle has the single collection ``{1, 2, 3}``; every other surface
    gets one relation per primitive pair (more with ``unique_d=False``).
    """
    if polytope.size == 3:
        sets = [cp2_collection(polytope)]
    else:
        sets = primitive_sets(polytope, unique=unique_d)
    relations = tuple(mult_relation(ps, polytope) for ps in sets)
    pres = QHPresentation(
        polytope.size,
        polytope.normals,
        polytope.supports,
        polytope.params,
        relations,
        unique_d,
    )
    logger.info(
        "Presentation with %d generators and %d multiplicative relations", pres.size, len(relations)
    )
    return pres
