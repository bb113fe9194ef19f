"""Standard moment polygons of the five toric Fano surfaces.

Each model carries symbolic vertices over named exponent symbols, so the facet
supports come out as exact linear forms (``eta_1 = -eps`` for the pentagon).
The parameter variables follow the conventions used downstream:

- ``cp2``: ``scale`` (variable ``x``), the triangle with legs ``scale``.
- ``s2xs2``: areas ``a`` and ``b`` (variables ``x``, ``y``).
- ``cp2_bl1``: ``scale`` and blow-up ``size`` (``x``, ``y``).
- ``cp2_bl2``: ``eps`` and ``delta`` (``x``, ``y``), the pentagon.
- ``cp2_bl3``: given ``alpha, beta, gamma``; the symbols are
  ``eps = 2/3 - gamma``, ``delta = 2/3 - beta``, ``theta = alpha - 1/3``
  (``x``, ``y``, ``z``), which makes the hexagon's supports monotone up to
  those symbols.
"""

from __future__ import annotations

import logging
from collections.abc import Mapping
from fractions import Fraction

from arith import ExponentParam, LinearForm, UsageError, parse_rational
from arith.rational import RationalLike
from toric.classify import FanoTag
from toric.errors import ParameterError
from toric.polytope import MomentPolytope, Numbering, build_polytope

logger = logging.getLogger(__name__)

MODEL_PARAMS: dict[FanoTag, tuple[str, ...]] = {
    FanoTag.CP2: ("scale",),
    FanoTag.S2XS2: ("a", "b"),
    FanoTag.CP2_BL1: ("scale", "size"),
    FanoTag.CP2_BL2: ("eps", "delta"),
    FanoTag.CP2_BL3: ("alpha", "beta", "gamma"),
}

_DEFAULTS: dict[FanoTag, dict[str, Fraction]] = {FanoTag.CP2: {"scale": Fraction(1)}}

_TWO_THIRDS = Fraction(2, 3)
_THIRD = Fraction(1, 3)


def _read(tag: FanoTag, params: Mapping[str, RationalLike]) -> dict[str, Fraction]:
    expected = MODEL_PARAMS[tag]
    unknown = sorted(set(params) - set(expected))
    if unknown:
        raise ParameterError(
            f"{tag.value} takes {', '.join(expected)}; got unexpected {', '.join(unknown)}"
        )
    values = dict(_DEFAULTS.get(tag, {}))
    for name, raw in params.items():
        try:
            values[name] = parse_rational(raw)
        except UsageError as e:
            raise ParameterError(f"{name}: {e}") from e
    missing = [n for n in expected if n not in values]
    if missing:
        raise ParameterError(f"{tag.value} needs {', '.join(missing)}")
    return values


def _require(condition: bool, inequality: str, values: Mapping[str, Fraction]) -> None:
    if not condition:
        shown = ", ".join(f"{k}={v}" for k, v in values.items())
        raise ParameterError(f"Parameter constraint violated: {inequality} ({shown})")


def _sym(name: str) -> LinearForm:
    return LinearForm.symbol(name)


def standard_model(tag: FanoTag | str, params: Mapping[str, RationalLike]) -> MomentPolytope:
    """The standard polygon for ``tag`` with exact (symbolic) vertices."""
    tag = FanoTag.parse(tag) if isinstance(tag, str) else tag
    v = _read(tag, params)
    zero = LinearForm()

    if tag is FanoTag.CP2:
        _require(v["scale"] > 0, "scale > 0", v)
        lam = _sym("scale")
        vertices = [(zero, zero), (lam, zero), (zero, lam)]
        exps = [ExponentParam("x", "scale", v["scale"])]
    elif tag is FanoTag.S2XS2:
        _require(v["a"] > 0, "a > 0", v)
        _require(v["b"] > 0, "b > 0", v)
        a, b = _sym("a"), _sym("b")
        vertices = [(zero, zero), (a, zero), (a, b), (zero, b)]
        exps = [ExponentParam("x", "a", v["a"]), ExponentParam("y", "b", v["b"])]
    elif tag is FanoTag.CP2_BL1:
        _require(v["size"] > 0, "size > 0", v)
        _require(v["size"] < v["scale"], "size < scale", v)
        lam, a = _sym("scale"), _sym("size")
        vertices = [(a, zero), (lam, zero), (zero, lam), (zero, a)]
        exps = [ExponentParam("x", "scale", v["scale"]), ExponentParam("y", "size", v["size"])]
    elif tag is FanoTag.CP2_BL2:
        eps, delta = v["eps"], v["delta"]
        _require(0 < eps < 1, "0 < eps < 1", v)
        _require(0 < delta < 1, "0 < delta < 1", v)
        _require(eps + delta > 1, "eps + delta > 1", v)
        e, d = _sym("eps"), _sym("delta")
        one = LinearForm.constant(1)
        vertices = [(zero, zero), (zero, e), (one - e, e), (d, one - d), (d, zero)]
        exps = [ExponentParam("x", "eps", eps), ExponentParam("y", "delta", delta)]
    else:
        alpha, beta, gamma = v["alpha"], v["beta"], v["gamma"]
        for name in ("alpha", "beta", "gamma"):
            _require(0 < v[name] < 1, f"0 < {name} < 1", v)
        _require(alpha < gamma, "alpha < gamma", v)
        _require(alpha < beta, "alpha < beta", v)
        _require(beta + gamma > 1, "beta + gamma > 1", v)
        a = _sym("theta") + _THIRD
        b = _TWO_THIRDS - _sym("delta")
        g = _TWO_THIRDS - _sym("eps")
        one = LinearForm.constant(1)
        vertices = [(a, zero), (zero, a), (zero, g), (one - g, g), (b, one - b), (b, zero)]
        exps = [
            ExponentParam("x", "eps", _TWO_THIRDS - gamma),
            ExponentParam("y", "delta", _TWO_THIRDS - beta),
            ExponentParam("z", "theta", alpha - _THIRD),
        ]

    logger.info("Standard model %s with %s", tag.value, {k: str(x) for k, x in v.items()})
    return build_polytope(vertices, exps, Numbering.TOP_CLOCKWISE)
