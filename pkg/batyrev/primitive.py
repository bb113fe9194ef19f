"""Primitive sets of a toric Fano surface and the minimal cones of their sums."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from batyrev.errors import ConsistencyError, UnsupportedModelError
from toric import MomentPolytope, validate
from toric.polytope import Vector, det

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PrimitiveSet:
    """A primitive collection ``indices`` with ``w = sum(e_i) = sum(c_j e_j)`` over ``cone``."""

    indices: tuple[int, ...]
    w: Vector
    cone: tuple[int, ...]
    coeffs: tuple[int, ...]

    def as_dict(self) -> dict[int, int]:
        return dict(zip(self.cone, self.coeffs))

    @property
    def label(self) -> str:
        return "{" + ", ".join(str(i) for i in self.indices) + "}"


def _multiple(w: Vector, e: Vector) -> int | None:
    """Positive integer ``c`` with ``w = c e``, if any."""
    if det(w, e) != 0:
        return None
    k = Fraction(w[0], e[0]) if e[0] else Fraction(w[1], e[1])
    if k <= 0:
        return None
    if k.denominator != 1:
        raise ConsistencyError(f"{w} is a non-integral multiple {k} of the ray {e}")
    return int(k)


def _in_cone(w: Vector, e: Vector, f: Vector) -> tuple[Fraction, Fraction] | None:
    """Coefficients ``(a, b)`` with ``w = a e + b f`` and both positive, if any."""
    d = det(e, f)
    if d == 0:
        return None
    a = Fraction(det(w, f), d)
    b = Fraction(det(e, w), d)
    if a <= 0 or b <= 0:
        return None
    return a, b


def _integral(w: Vector, cone: tuple[int, ...], coeffs: tuple[Fraction, ...]) -> tuple[int, ...]:
    if any(c.denominator != 1 for c in coeffs):
        raise ConsistencyError(
            f"w = {w} has non-integral coefficients {[str(c) for c in coeffs]} on cone {cone}"
        )
    return tuple(int(c) for c in coeffs)


def _minimal_cone(polytope: MomentPolytope, pair: tuple[int, int], w: Vector) -> PrimitiveSet:
    if w == (0, 0):
        return PrimitiveSet(pair, w, (), ())
    for f in polytope.facets:
        c = _multiple(w, f.normal)
        if c is not None:
            return _checked(PrimitiveSet(pair, w, (f.index,), (c,)))
    n = polytope.size
    for i in range(1, n + 1):
        j = i % n + 1
        found = _in_cone(w, polytope.facet(i).normal, polytope.facet(j).normal)
        if found is not None:
            cone = (min(i, j), max(i, j))
            coeffs = found if cone == (i, j) else (found[1], found[0])
            return _checked(PrimitiveSet(pair, w, cone, _integral(w, cone, coeffs)))
    raise ConsistencyError(f"w = {w} of the pair {pair} lies in no cone of the fan")


def _checked(ps: PrimitiveSet) -> PrimitiveSet:
    if set(ps.cone) & set(ps.indices):
        raise ConsistencyError(f"Cone {ps.cone} of {ps.label} meets the primitive set")
    return ps


def _all_representations(polytope: MomentPolytope, pair: tuple[int, int], w: Vector) -> list[PrimitiveSet]:
    """Every way of writing ``w`` over one ray or two independent rays outside the pair."""
    if w == (0, 0):
        return [PrimitiveSet(pair, w, (), ())]
    out = []
    outside = [f for f in polytope.facets if f.index not in pair]
    for f in outside:
        try:
            c = _multiple(w, f.normal)
        except ConsistencyError:
            continue
        if c is not None:
            out.append(PrimitiveSet(pair, w, (f.index,), (c,)))
    for f, g in combinations(outside, 2):
        found = _in_cone(w, f.normal, g.normal)
        if found is None or any(c.denominator != 1 for c in found):
            continue
        out.append(PrimitiveSet(pair, w, (f.index, g.index), (int(found[0]), int(found[1]))))
    return out


def primitive_sets(polytope: MomentPolytope, unique: bool = True) -> list[PrimitiveSet]:
    """Pairs of non-adjacent facets with the minimal cone containing their normal sum.

    With ``unique=False`` every positive integral representation of ``w`` over
    rays outside the pair is returned as well (minimal cone first); the extra
    relations they produce are still valid and are useful for cross-checks.
    """
    if not validate(polytope).fano:
        raise UnsupportedModelError("Primitive sets are only computed for Fano polygons")
    n = polytope.size
    if n == 3:
        raise UnsupportedModelError(
            "The CP2 triangle has no primitive pairs; use the hard-coded CP2 presentation"
        )
    out: list[PrimitiveSet] = []
    for i, j in combinations(range(1, n + 1), 2):
        if polytope.adjacent(i, j):
            continue
        ei, ej = polytope.facet(i).normal, polytope.facet(j).normal
        w = (ei[0] + ej[0], ei[1] + ej[1])
        minimal = _minimal_cone(polytope, (i, j), w)
        out.append(minimal)
        if not unique:
            out.extend(r for r in _all_representations(polytope, (i, j), w) if r != minimal)
    logger.debug("Primitive sets: %s", [p.label for p in out])
    return out


def cp2_collection(polytope: MomentPolytope) -> PrimitiveSet:
    """The single primitive collection {1, 2, 3} of the triangle."""
    if polytope.size != 3:
        raise UnsupportedModelError("Only the CP2 triangle has a three-element primitive collection")
    w = tuple(sum(f.normal[k] for f in polytope.facets) for k in range(2))
    if w != (0, 0):
        raise ConsistencyError(f"Normals of the triangle sum to {w}, not zero")
    return PrimitiveSet((1, 2, 3), (0, 0), (), ())
