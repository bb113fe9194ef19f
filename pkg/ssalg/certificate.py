"""Verdicts and the witnesses that make them re-checkable."""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Any

from arith import FieldElem, MPoly, UniPoly, format_rational


class Verdict(str, Enum):
    SEMISIMPLE = "Semisimple"
    NOT_SEMISIMPLE = "NotSemisimple"
    CONTAINS_FIELD_SUMMAND = "ContainsFieldSummand"
    RADICAL_IDEAL = "RadicalIdeal"
    INCONCLUSIVE = "Inconclusive"

    @property
    def positive(self) -> bool:
        return self is not Verdict.INCONCLUSIVE


class WitnessKind(str, Enum):
    """``UNIT``: nonzero at the all-ones point, valid for every choice of exponents.
    ``GENERIC``: nonzero elsewhere, valid when the parameters are independent."""

    UNIT = "unit"
    GENERIC = "generic"


def _point_json(point: dict[str, Fraction]) -> dict[str, str]:
    return {k: format_rational(v) for k, v in point.items()}


@dataclass(frozen=True)
class NonvanishingWitness:
    polynomial: MPoly
    point: dict[str, Fraction]
    value: Fraction
    kind: WitnessKind

    def to_json(self) -> dict[str, Any]:
        return {
            "polynomial": self.polynomial.to_text(),
            "point": _point_json(self.point),
            "value": format_rational(self.value),
            "kind": self.kind.value,
        }


@dataclass(frozen=True)
class ResultantWitness:
    """``Res(f, g)`` with its numerator split as ``content * prod(factor^k) * core``.

    ``content`` is a monomial in the parameters and each stripped factor is
    declared nonzero, so ``core`` being nonzero at ``nonvanishing.point``
    certifies ``Res(f, g) != 0``.
    """

    f: UniPoly
    g: UniPoly
    resultant: FieldElem
    content: MPoly
    stripped: tuple[tuple[MPoly, int], ...]
    core: MPoly
    nonvanishing: NonvanishingWitness | None

    def to_json(self) -> dict[str, Any]:
        out: dict[str, Any] = {
            "f": self.f.to_text(),
            "g": self.g.to_text(),
            "resultant": self.resultant.to_text(),
            "content": self.content.to_text(),
            "stripped": [{"factor": p.to_text(), "power": k} for p, k in self.stripped],
            "core": self.core.to_text(),
        }
        if self.nonvanishing is not None:
            out["point"] = _point_json(self.nonvanishing.point)
            out["value"] = format_rational(self.nonvanishing.value)
            out["kind"] = self.nonvanishing.kind.value
        return out


@dataclass(frozen=True)
class NilpotentWitness:
    """``element^power == 0`` modulo ``modulus`` while ``element`` itself is nonzero."""

    modulus: UniPoly
    element: UniPoly
    power: int

    def to_json(self) -> dict[str, Any]:
        return {
            "modulus": self.modulus.to_text(),
            "element": self.element.to_text(),
            "power": self.power,
        }


@dataclass(frozen=True)
class SummandWitness:
    """``f = part * rest`` with ``u*part + v*rest == 1`` and ``p*part + r*part' == 1``."""

    f: UniPoly
    part: UniPoly
    rest: UniPoly
    u: UniPoly
    v: UniPoly
    p: UniPoly
    r: UniPoly

    def to_json(self) -> dict[str, Any]:
        return {
            "f": self.f.to_text(),
            "a1": self.part.to_text(),
            "cofactor": self.rest.to_text(),
            "bezout": {"u": self.u.to_text(), "v": self.v.to_text()},
            "squarefree": {"p": self.p.to_text(), "r": self.r.to_text()},
        }


@dataclass(frozen=True)
class MembershipWitness:
    """``target == sum(m * g)`` over the ideal generators."""

    target: MPoly
    generators: tuple[MPoly, ...]
    multipliers: tuple[MPoly, ...]
    label: str = ""

    def holds(self) -> bool:
        total = MPoly.zero(self.target.system)
        for m, g in zip(self.multipliers, self.generators, strict=True):
            total = total + m * g
        return total == self.target

    def to_json(self) -> dict[str, Any]:
        return {
            "label": self.label,
            "target": self.target.to_text(),
            "multipliers": [m.to_text() for m in self.multipliers],
        }


@dataclass(frozen=True)
class TraceFormWitness:
    gram: tuple[tuple[FieldElem, ...], ...]
    determinant: FieldElem
    nonvanishing: NonvanishingWitness | None

    def to_json(self) -> dict[str, Any]:
        out: dict[str, Any] = {
            "gram": [[c.to_text() for c in row] for row in self.gram],
            "determinant": self.determinant.to_text(),
        }
        if self.nonvanishing is not None:
            out["point"] = _point_json(self.nonvanishing.point)
            out["value"] = format_rational(self.nonvanishing.value)
            out["kind"] = self.nonvanishing.kind.value
        return out


@dataclass(frozen=True)
class IdempotentWitness:
    """``e1 + e2 == 1``, ``e1*e2 == 0`` and ``e_i^2 == e_i`` modulo ``modulus``."""

    modulus: UniPoly
    factors: tuple[UniPoly, UniPoly]
    e1: UniPoly
    e2: UniPoly

    def to_json(self) -> dict[str, Any]:
        return {
            "modulus": self.modulus.to_text(),
            "factors": [g.to_text() for g in self.factors],
            "e1": self.e1.to_text(),
            "e2": self.e2.to_text(),
        }


@dataclass(frozen=True)
class Certificate:
    """A verdict on one property with the witnesses that support it."""

    verdict: Verdict
    subject: str
    resultant: ResultantWitness | None = None
    nilpotent: NilpotentWitness | None = None
    summand: SummandWitness | None = None
    trace: TraceFormWitness | None = None
    idempotents: IdempotentWitness | None = None
    membership: tuple[MembershipWitness, ...] = ()
    parts: tuple[Certificate, ...] = field(default=())
    note: str = ""

    def to_json(self) -> dict[str, Any]:
        witness: dict[str, Any] = {}
        if self.resultant is not None:
            witness["resultant"] = self.resultant.to_json()
        if self.nilpotent is not None:
            witness["nilpotent"] = self.nilpotent.to_json()
        if self.summand is not None:
            witness["summand"] = self.summand.to_json()
        if self.trace is not None:
            witness["trace_form"] = self.trace.to_json()
        if self.idempotents is not None:
            witness["idempotents"] = self.idempotents.to_json()
        if self.membership:
            witness["membership"] = [m.to_json() for m in self.membership]
        out: dict[str, Any] = {"verdict": self.verdict.value, "subject": self.subject}
        if witness:
            out["witness"] = witness
        if self.parts:
            out["parts"] = [p.to_json() for p in self.parts]
        if self.note:
            out["note"] = self.note
        return out
