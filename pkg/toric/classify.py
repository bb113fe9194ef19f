"""Classification of toric Fano surfaces up to GL(2, Z)."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from enum import Enum

from toric.errors import NotFanoError
from toric.polytope import Fan, Matrix, MomentPolytope, Vector, det

logger = logging.getLogger(__name__)


class FanoTag(str, Enum):
    CP2 = "CP2"
    S2XS2 = "S2xS2"
    CP2_BL1 = "CP2_bl1"
    CP2_BL2 = "CP2_bl2"
    CP2_BL3 = "CP2_bl3"

    @classmethod
    def parse(cls, text: str) -> FanoTag:
        """Accept ``cp2-bl2``, ``CP2_bl2``, ``s2xs2`` and similar spellings."""
        key = text.strip().lower().replace("-", "_")
        for tag in cls:
            if tag.value.lower() == key:
                return tag
        raise NotFanoError(f"Unknown model {text!r}; expected one of {', '.join(t.value for t in cls)}")


# Rays of each template in counterclockwise order.
TEMPLATES: dict[FanoTag, tuple[Vector, ...]] = {
    FanoTag.CP2: ((1, 0), (0, 1), (-1, -1)),
    FanoTag.S2XS2: ((1, 0), (0, 1), (-1, 0), (0, -1)),
    FanoTag.CP2_BL1: ((1, 0), (0, 1), (-1, -1), (0, -1)),
    FanoTag.CP2_BL2: ((1, 0), (0, 1), (-1, 0), (-1, -1), (0, -1)),
    FanoTag.CP2_BL3: ((1, 0), (1, 1), (0, 1), (-1, 0), (-1, -1), (0, -1)),
}


@dataclass(frozen=True)
class FanoClass:
    """Class tag with a unimodular witness.

    ``matrix`` sends the normal of facet ``i`` to template ray ``facet_map[i-1]``.
    """

    tag: FanoTag
    matrix: Matrix
    facet_map: tuple[int, ...]

    def apply(self, v: Vector) -> Vector:
        (a, b), (c, d) = self.matrix
        return a * v[0] + b * v[1], c * v[0] + d * v[1]

    def verify(self, polytope: MomentPolytope) -> bool:
        template = TEMPLATES[self.tag]
        images = [self.apply(e) for e in polytope.normals]
        expected = [template[k] for k in self.facet_map]
        return images == expected and sorted(images) == sorted(template)


def _solve(rays: tuple[Vector, Vector], targets: tuple[Vector, Vector]) -> Matrix | None:
    """The integral matrix M with M r_0 = t_0 and M r_1 = t_1, if any."""
    (p, r), (q, s) = rays
    d = det(rays[0], rays[1])
    if abs(d) != 1:
        return None
    # inverse of the column matrix [[p, q], [r, s]]
    inv = ((s * d, -q * d), (-r * d, p * d))
    (t0x, t0y), (t1x, t1y) = targets
    cols = ((t0x, t1x), (t0y, t1y))
    return (
        (
            cols[0][0] * inv[0][0] + cols[0][1] * inv[1][0],
            cols[0][0] * inv[0][1] + cols[0][1] * inv[1][1],
        ),
        (
            cols[1][0] * inv[0][0] + cols[1][1] * inv[1][0],
            cols[1][0] * inv[0][1] + cols[1][1] * inv[1][1],
        ),
    )


def classify_fano(polytope: MomentPolytope) -> FanoClass:
    """Match the fan against the five templates.

    An adjacent pair of rays is a basis, so each choice of image pair (a
    template ray and its neighbour on either side) fixes the matrix; the match
    is accepted when every ray lands on the template in cyclic order.
    """
    fan = Fan.of(polytope)
    rays = fan.rays
    n = len(rays)
    for tag, template in TEMPLATES.items():
        if len(template) != n:
            continue
        for k in range(n):
            for step in (1, -1):
                matrix = _solve((rays[0], rays[1]), (template[k], template[(k + step) % n]))
                if matrix is None:
                    raise NotFanoError("Adjacent normals do not form a lattice basis")
                witness = FanoClass(tag, matrix, ())
                if all(witness.apply(rays[i]) == template[(k + step * i) % n] for i in range(n)):
                    position = {fan.facet_of[i]: (k + step * i) % n for i in range(n)}
                    result = FanoClass(
                        tag, matrix, tuple(position[f.index] for f in polytope.facets)
                    )
                    logger.debug("Classified as %s with matrix %s", tag.value, matrix)
                    return result
    raise NotFanoError(
        f"Normals {list(polytope.normals)} match none of the toric Fano surfaces"
    )
