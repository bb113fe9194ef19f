"""Moment polygons of toric 4-manifolds.

Vertices are pairs of ``LinearForm`` so that coordinates such as ``1 - eps``
stay symbolic; the numeric values of the exponent symbols (carried by the
polygon's ``ExponentParam`` list) decide orientation, convexity and the facet
normals. Facet ``i`` lies on the line ``e_i . (x, y) = eta_i`` with ``e_i`` the
primitive inward normal, so every point of the polygon has ``e_i . p >= eta_i``.
"""

from __future__ import annotations

import logging
from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import cmp_to_key
from math import gcd, lcm
from typing import Any

from arith import (
    ExponentParam,
    LinearForm,
    UsageError,
    format_rational,
    parse_linear_form,
    parse_rational,
)
from toric.errors import PolytopeValidationError

logger = logging.getLogger(__name__)

Vector = tuple[int, int]
Point = tuple[LinearForm, LinearForm]
Matrix = tuple[tuple[int, int], tuple[int, int]]


class Numbering(str, Enum):
    """How facets are numbered 1..l."""

    VERTEX_ORDER = "vertex-order"
    TOP_CLOCKWISE = "top-clockwise"


@dataclass(frozen=True)
class Facet:
    index: int
    normal: Vector
    support: LinearForm
    start: Point
    end: Point


@dataclass(frozen=True)
class MomentPolytope:
    """A convex rational polygon with its numbered facets.

    ``vertices`` are stored counterclockwise; ``facets`` follow the numbering.
    """

    vertices: tuple[Point, ...]
    facets: tuple[Facet, ...]
    params: tuple[ExponentParam, ...] = ()
    numbering: Numbering = Numbering.VERTEX_ORDER

    @property
    def size(self) -> int:
        return len(self.facets)

    @property
    def normals(self) -> tuple[Vector, ...]:
        return tuple(f.normal for f in self.facets)

    @property
    def supports(self) -> tuple[LinearForm, ...]:
        return tuple(f.support for f in self.facets)

    def facet(self, index: int) -> Facet:
        """Facet by its 1-based number."""
        if not 1 <= index <= self.size:
            raise UsageError(f"Facet {index} out of range 1..{self.size}")
        return self.facets[index - 1]

    def adjacent(self, i: int, j: int) -> bool:
        """Whether facets ``i`` and ``j`` (1-based) share a vertex."""
        return (i - j) % self.size in (1, self.size - 1)

    @property
    def values(self) -> dict[str, Fraction]:
        return {p.symbol: p.value for p in self.params if p.value is not None}

    def numeric_vertices(self) -> list[tuple[Fraction, Fraction]]:
        return [_numeric(v, self.values) for v in self.vertices]

    def numeric_supports(self) -> list[Fraction]:
        return [f.support.evaluate(self.values) for f in self.facets]

    def transform(self, matrix: Matrix, translation: Vector = (0, 0)) -> MomentPolytope:
        """Image under ``p -> M p + t`` for an integral ``M`` with det +-1."""
        (a, b), (c, d) = matrix
        sign = a * d - b * c
        if abs(sign) != 1:
            raise UsageError(f"Matrix {matrix} is not unimodular")
        tx, ty = translation
        image = [
            (x * a + y * b + tx, x * c + y * d + ty) for x, y in self.vertices
        ]
        if sign < 0 and self.numbering is Numbering.VERTEX_ORDER:
            image.reverse()
        return build_polytope(image, self.params, self.numbering)

    def translate(self, dx: int, dy: int) -> MomentPolytope:
        return self.transform(((1, 0), (0, 1)), (dx, dy))

    def to_json(self) -> dict[str, Any]:
        return {
            "vertices": [[_form_text(x), _form_text(y)] for x, y in self.vertices],
            "numbering": self.numbering.value,
            "params": [_param_json(p) for p in self.params],
            "normals": [list(n) for n in self.normals],
            "supports": [f.support.to_json() for f in self.facets],
        }


def _form_text(form: LinearForm) -> str:
    return format_rational(form.const) if form.is_constant else str(form)


def _param_json(p: ExponentParam) -> dict[str, str | None]:
    return {
        "name": p.name,
        "label": p.label,
        "value": None if p.value is None else format_rational(p.value),
    }


def _as_form(value: LinearForm | Fraction | int | str) -> LinearForm:
    if isinstance(value, LinearForm):
        return value
    return LinearForm(parse_rational(value))


def _numeric(point: Point, values: Mapping[str, Fraction]) -> tuple[Fraction, Fraction]:
    try:
        return point[0].evaluate(values), point[1].evaluate(values)
    except UsageError as e:
        raise PolytopeValidationError(f"Vertex ({point[0]}, {point[1]}): {e}") from e


def _cross(o: Sequence[Fraction], a: Sequence[Fraction], b: Sequence[Fraction]) -> Fraction:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def _primitive(x: Fraction, y: Fraction) -> Vector:
    """Positive multiple of ``(x, y)`` with coprime integer entries."""
    scale = lcm(x.denominator, y.denominator)
    a, b = int(x * scale), int(y * scale)
    g = gcd(a, b)
    if g == 0:
        raise PolytopeValidationError("Zero-length edge has no normal")
    return a // g, b // g


def _dot(e: Vector, point: Point) -> LinearForm:
    return point[0] * e[0] + point[1] * e[1]


def build_polytope(
    vertices: Sequence[Sequence[LinearForm | Fraction | int | str]],
    params: Iterable[ExponentParam] = (),
    numbering: Numbering = Numbering.VERTEX_ORDER,
) -> MomentPolytope:
    """Build a polygon from its vertex cycle.

    With ``VERTEX_ORDER`` the vertices must be counterclockwise and facet ``i``
    joins vertex ``i`` to vertex ``i+1``. With ``TOP_CLOCKWISE`` either
    orientation is accepted; facet 1 is the top horizontal edge (inward normal
    ``(0, -1)``) and the rest are numbered clockwise from it. Without a top edge
    the input vertex order is used.
    """
    params = tuple(params)
    numbering = Numbering(numbering)
    values = {p.symbol: p.value for p in params if p.value is not None}
    points: list[Point] = []
    for v in vertices:
        if len(v) != 2:
            raise PolytopeValidationError(f"Vertex {list(v)} is not a 2-vector")
        points.append((_as_form(v[0]), _as_form(v[1])))
    n = len(points)
    if n < 3:
        raise PolytopeValidationError(f"A polygon needs at least 3 vertices, got {n}")
    numeric = [_numeric(p, values) for p in points]
    if len(set(numeric)) != n:
        raise PolytopeValidationError("Repeated vertex in the vertex list")

    area2 = sum(
        (numeric[k][0] * numeric[(k + 1) % n][1] - numeric[(k + 1) % n][0] * numeric[k][1]
         for k in range(n)),
        Fraction(0),
    )
    if area2 == 0:
        raise PolytopeValidationError("Vertices enclose no area")
    clockwise = area2 < 0
    if clockwise and numbering is Numbering.VERTEX_ORDER:
        raise PolytopeValidationError("Vertices are listed clockwise; expected counterclockwise")
    if clockwise:
        points.reverse()
        numeric.reverse()

    for k in range(n):
        turn = _cross(numeric[k - 1], numeric[k], numeric[(k + 1) % n])
        if turn == 0:
            raise PolytopeValidationError(f"Collinear vertices around {_point_text(points[k])}")
        if turn < 0:
            raise PolytopeValidationError(f"Polygon is not convex at {_point_text(points[k])}")

    ccw: list[tuple[Vector, LinearForm, Point, Point]] = []
    for k in range(n):
        start, end = points[k], points[(k + 1) % n]
        (x0, y0), (x1, y1) = numeric[k], numeric[(k + 1) % n]
        e = _primitive(-(y1 - y0), x1 - x0)
        eta = _dot(e, start)
        if eta != _dot(e, end):
            raise PolytopeValidationError(
                f"Edge {_point_text(start)} -> {_point_text(end)} is not parallel "
                f"for all parameter values: supports {eta} and {_dot(e, end)}"
            )
        level = eta.evaluate(values)
        for j in range(n):
            if j in (k, (k + 1) % n):
                continue
            p = numeric[j]
            if e[0] * p[0] + e[1] * p[1] <= level:
                raise PolytopeValidationError(
                    f"Vertex {_point_text(points[j])} is not strictly inside facet line {e} >= {eta}"
                )
        ccw.append((e, eta, start, end))

    order = _facet_order(ccw, numbering, clockwise)
    facets = tuple(
        Facet(i + 1, ccw[k][0], ccw[k][1], ccw[k][2], ccw[k][3]) for i, k in enumerate(order)
    )
    logger.debug(
        "Built polygon with %d facets, normals %s", n, [f.normal for f in facets]
    )
    return MomentPolytope(tuple(points), facets, params, numbering)


def _facet_order(
    ccw: list[tuple[Vector, LinearForm, Point, Point]], numbering: Numbering, clockwise: bool
) -> list[int]:
    n = len(ccw)
    if numbering is Numbering.TOP_CLOCKWISE:
        tops = [k for k, (e, *_rest) in enumerate(ccw) if e == (0, -1)]
        if tops:
            k = tops[0]
            return [(k - i) % n for i in range(n)]
        if clockwise:
            # input edge i -> i+1 is the counterclockwise edge n-2-i
            return [(n - 2 - i) % n for i in range(n)]
    return list(range(n))


def _point_text(point: Point) -> str:
    return f"({_form_text(point[0])}, {_form_text(point[1])})"


def det(a: Vector, b: Vector) -> int:
    return a[0] * b[1] - a[1] * b[0]


def _half(v: Vector) -> int:
    return 0 if v[1] > 0 or (v[1] == 0 and v[0] > 0) else 1


def _angle_cmp(a: Vector, b: Vector) -> int:
    ha, hb = _half(a), _half(b)
    if ha != hb:
        return ha - hb
    d = det(a, b)
    return -1 if d > 0 else (1 if d < 0 else 0)


@dataclass(frozen=True)
class Fan:
    """Rays of the normal fan in counterclockwise angular order.

    ``facet_of[k]`` is the facet number of ray ``k``.
    """

    rays: tuple[Vector, ...]
    facet_of: tuple[int, ...]

    @classmethod
    def of(cls, polytope: MomentPolytope) -> Fan:
        indexed = sorted(
            ((f.normal, f.index) for f in polytope.facets),
            key=cmp_to_key(lambda a, b: _angle_cmp(a[0], b[0])),
        )
        rays = tuple(r for r, _ in indexed)
        if len(set(rays)) != len(rays):
            raise PolytopeValidationError("Two facets share a normal direction")
        return cls(rays, tuple(i for _, i in indexed))

    @property
    def cones(self) -> list[tuple[int, ...]]:
        """Zero cone, the rays, then adjacent pairs, by ray position."""
        n = len(self.rays)
        return [(), *((k,) for k in range(n)), *((k, (k + 1) % n) for k in range(n))]


@dataclass(frozen=True)
class Validation:
    delzant: bool
    fano: bool
    bad_vertices: tuple[tuple[int, int], ...] = ()


def validate(polytope: MomentPolytope) -> Validation:
    """Delzant and Fano conditions on the facet normals.

    Delzant: adjacent normals form a basis of Z^2. Fano: taken in angular
    order, the normals are the vertices of a strictly convex lattice polygon
    around the origin whose consecutive vertices form positively oriented bases.
    """
    n = polytope.size
    bad = []
    for i in range(1, n + 1):
        j = i % n + 1
        if abs(det(polytope.facet(i).normal, polytope.facet(j).normal)) != 1:
            bad.append((i, j))
    rays = Fan.of(polytope).rays
    fano = all(det(rays[k], rays[(k + 1) % n]) == 1 for k in range(n))
    fano = fano and all(
        det(
            (rays[k][0] - rays[k - 1][0], rays[k][1] - rays[k - 1][1]),
            (rays[(k + 1) % n][0] - rays[k][0], rays[(k + 1) % n][1] - rays[k][1]),
        )
        > 0
        for k in range(n)
    )
    result = Validation(not bad, fano, tuple(bad))
    logger.debug("Validation: delzant=%s fano=%s", result.delzant, result.fano)
    return result


def polytope_from_json(data: Mapping[str, Any]) -> MomentPolytope:
    """Inverse of ``MomentPolytope.to_json``; normals and supports are recomputed."""
    try:
        raw_vertices = data["vertices"]
    except KeyError:
        raise PolytopeValidationError("Polytope JSON needs a 'vertices' list") from None
    vertices = [[parse_linear_form(str(c)) for c in v] for v in raw_vertices]
    params = tuple(
        ExponentParam(
            p["name"],
            p.get("label"),
            None if p.get("value") is None else parse_rational(p["value"]),
        )
        for p in data.get("params", [])
    )
    numbering = Numbering(data.get("numbering", Numbering.VERTEX_ORDER.value))
    return build_polytope(vertices, params, numbering)
