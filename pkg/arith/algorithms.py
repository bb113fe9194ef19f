"""Univariate algorithms over the coefficient field.

Coefficients are cleared into ``ZZ[var, params]`` (or ``QQ[...]``) before calling
sympy's gcd and resultant routines, so remainder sequences run on integer
polynomials instead of growing rational functions.

Resultant convention: the determinant of the Sylvester matrix whose first
``deg g`` rows hold the coefficients of ``f`` and whose column ``k`` multiplies
``var^(deg f + deg g - 1 - k)``. This is also sympy's convention.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Any

from sympy import QQ, ZZ, grlex
from sympy.polys.matrices import DomainMatrix
from sympy.polys.rings import PolyRing

from arith.errors import UsageError
from arith.field import FieldElem
from arith.params import BASE
from arith.rational import from_qq
from arith.unipoly import UniPoly

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Cleared:
    """``f = poly / scale`` with ``poly`` integral in ``[var, *params]``."""

    poly: Any
    scale: FieldElem
    params: tuple[str, ...]


@dataclass(frozen=True)
class SquarefreeDecomposition:
    """``f = unit * prod(a^m for a, m in factors)`` with monic, pairwise coprime ``a``."""

    unit: FieldElem
    factors: list[tuple[UniPoly, int]] = field(default_factory=list)

    def expand(self) -> UniPoly:
        if not self.factors:
            raise UsageError("Decomposition of a constant has no variable")
        first = self.factors[0][0]
        acc = UniPoly.one(first.system, first.var) * self.unit
        for a, m in self.factors:
            acc = acc * a**m
        return acc

    def part(self, multiplicity: int) -> UniPoly | None:
        for a, m in self.factors:
            if m == multiplicity:
                return a
        return None

    @property
    def is_squarefree(self) -> bool:
        return all(m == 1 for _, m in self.factors)

    def radical(self) -> UniPoly:
        """Product of the distinct factors."""
        if not self.factors:
            raise UsageError("Constant polynomial has no radical")
        first = self.factors[0][0]
        acc = UniPoly.one(first.system, first.var)
        for a, _ in self.factors:
            acc = acc * a
        return acc


def to_ring(poly: Any, ring: Any) -> Any:
    """Move a sympy polynomial into ``ring`` by symbol name."""
    src = [str(s) for s in poly.ring.symbols]
    dst = [str(s) for s in ring.symbols]
    idx = [dst.index(n) if n in dst else None for n in src]
    data = {}
    for m, c in poly.items():
        vec = [0] * len(dst)
        for name, i, e in zip(src, idx, m):
            if i is None:
                if e:
                    raise UsageError(f"Variable {name!r} is not available in the target ring")
                continue
            vec[i] += e
        data[tuple(vec)] = c
    return ring.from_dict(data, poly.ring.domain)


def _used_params(*polys: UniPoly) -> tuple[str, ...]:
    system = polys[0].system
    used = {BASE}
    for f in polys:
        for c in f.poly.values():
            for part in (c.numer, c.denom):
                for m in part.keys():
                    used.update(n for n, e in zip(system.active_params, m) if e)
    return tuple(n for n in system.active_params if n in used)


def clear_denominators(f: UniPoly, params: tuple[str, ...] | None = None, domain: Any = ZZ) -> Cleared:
    """Write ``f`` as an integral polynomial over its used parameters divided by a scale."""
    system = f.system
    params = params or _used_params(f)
    cfield = system.coeff_field
    common = cfield.ring.one
    for c in f.poly.values():
        common = common.lcm(c.denom)
    qring = PolyRing([f.var, *params], QQ, grlex)
    sub = PolyRing(list(params), QQ, grlex)
    data: dict[tuple[int, ...], Any] = {}
    for (k,), c in f.poly.items():
        part = to_ring(c.numer * common.exquo(c.denom), sub)
        for m, a in part.items():
            data[(k, *m)] = a
    poly = qring.from_dict(data)
    scale = FieldElem(system, cfield.new(common))
    if domain == ZZ:
        num, poly = poly.clear_denoms()
        poly = poly.set_ring(qring.clone(domain=ZZ))
        scale = scale * from_qq(num)
    return Cleared(poly, scale, params)


def _from_cleared(poly: Any, template: UniPoly) -> UniPoly:
    """Read a polynomial in ``[var, *params]`` back as a ``UniPoly``."""
    system = template.system
    cfield = system.coeff_field
    params = [str(s) for s in poly.ring.symbols[1:]]
    sub = PolyRing(params, QQ, grlex)
    groups: dict[int, dict[tuple[int, ...], Any]] = {}
    for m, c in poly.items():
        groups.setdefault(m[0], {})[m[1:]] = QQ.convert(c)
    data = {}
    for k, part in groups.items():
        data[(k,)] = cfield.new(to_ring(sub.from_dict(part), cfield.ring))
    return UniPoly(system, template.var, template.poly.ring.from_dict(data))


def _check_pair(f: UniPoly, g: UniPoly) -> None:
    if f.system != g.system or f.var != g.var:
        raise UsageError("Polynomials over different systems or variables")


def gcd_uni(f: UniPoly, g: UniPoly) -> UniPoly:
    """Monic gcd over the coefficient field."""
    _check_pair(f, g)
    if not f and not g:
        raise UsageError("gcd of two zero polynomials is undefined")
    if not f:
        return g.monic()
    if not g:
        return f.monic()
    params = _used_params(f, g)
    cf = clear_denominators(f, params, QQ)
    cg = clear_denominators(g, params, QQ)
    h = cf.poly.gcd(cg.poly)
    return _from_cleared(h, f).monic()


def _sylvester_rows(f_coeffs: list[Any], g_coeffs: list[Any], zero: Any) -> list[list[Any]]:
    """Rows of the Sylvester matrix from coefficient lists (highest degree first)."""
    n, m = len(f_coeffs) - 1, len(g_coeffs) - 1
    size = n + m
    rows = []
    for i in range(m):
        rows.append([zero] * i + f_coeffs + [zero] * (size - n - 1 - i))
    for j in range(n):
        rows.append([zero] * j + g_coeffs + [zero] * (size - m - 1 - j))
    return rows


def sylvester_matrix(f: UniPoly, g: UniPoly) -> list[list[FieldElem]]:
    """Sylvester matrix with the rows of ``f`` first."""
    _check_pair(f, g)
    if not f or not g:
        raise UsageError("Sylvester matrix of a zero polynomial")
    zero = FieldElem.zero(f.system)
    return _sylvester_rows(f.coefficients()[::-1], g.coefficients()[::-1], zero)


def sylvester_determinant(f: UniPoly, g: UniPoly) -> FieldElem:
    """Resultant as a plain determinant; used to cross-check ``resultant_uni``."""
    rows = sylvester_matrix(f, g)
    if not rows:
        return FieldElem.one(f.system)
    domain = f.system.coeff_domain
    matrix = DomainMatrix([[c.value for c in row] for row in rows], (len(rows), len(rows)), domain)
    return FieldElem(f.system, matrix.det())


def _constant_resultant(f: UniPoly, g: UniPoly) -> FieldElem | None:
    n, m = f.degree(), g.degree()
    one = FieldElem.one(f.system)
    if n == 0 and m == 0:
        return one
    if n == 0:
        return f.lc() ** m
    if m == 0:
        return g.lc() ** n
    return None


def resultant_uni(f: UniPoly, g: UniPoly) -> FieldElem:
    """``Res(f, g)`` with respect to the main variable."""
    _check_pair(f, g)
    if not f or not g:
        raise UsageError("Resultant with a zero polynomial")
    trivial = _constant_resultant(f, g)
    if trivial is not None:
        return trivial
    params = _used_params(f, g)
    cf = clear_denominators(f, params)
    cg = clear_denominators(g, params)
    res = cf.poly.resultant(cg.poly)
    cfield = f.system.coeff_field
    value = FieldElem(f.system, cfield.new(to_ring(res, cfield.ring)))
    n, m = f.degree(), g.degree()
    logger.debug("Resultant in %s of degrees %d, %d over %s", f.var, n, m, ", ".join(params))
    return value / (cf.scale**m * cg.scale**n)


def resultant_with_cofactors(f: UniPoly, g: UniPoly) -> tuple[FieldElem, UniPoly, UniPoly]:
    """``(Res, u, v)`` with ``u*f + v*g == Res`` exactly.

    Cofactors come from the last row of the adjugate of the Sylvester matrix of
    the cleared integral polynomials.
    """
    _check_pair(f, g)
    if not f or not g:
        raise UsageError("Resultant with a zero polynomial")
    n, m = f.degree(), g.degree()
    zero_u = UniPoly.zero(f.system, f.var)
    one_u = UniPoly.one(f.system, f.var)
    if n == 0 and m == 0:
        return FieldElem.one(f.system), zero_u, one_u * g.lc().inverse()
    if n == 0:
        a = f.lc()
        return a**m, one_u * a ** (m - 1), zero_u
    if m == 0:
        b = g.lc()
        return b**n, zero_u, one_u * b ** (n - 1)

    params = _used_params(f, g)
    cf = clear_denominators(f, params)
    cg = clear_denominators(g, params)
    zring = cf.poly.ring
    sub = zring[1:]
    domain = sub.to_domain()
    f_coeffs = _coefficient_list(cf.poly, n, sub)
    g_coeffs = _coefficient_list(cg.poly, m, sub)
    rows = _sylvester_rows(f_coeffs, g_coeffs, sub.zero)
    adj, det = DomainMatrix(rows, (n + m, n + m), domain).adj_det()
    last = adj.to_list()[-1]

    cfield = f.system.coeff_field
    ring = f.poly.ring
    x = ring.gens[0]

    def lift(p: Any) -> Any:
        return cfield.new(to_ring(p, cfield.ring))

    big_u = ring.zero
    for i in range(m):
        big_u += ring.ground_new(lift(last[i])) * x ** (m - 1 - i)
    big_v = ring.zero
    for j in range(n):
        big_v += ring.ground_new(lift(last[m + j])) * x ** (n - 1 - j)
    norm = cf.scale**m * cg.scale**n
    value = FieldElem(f.system, lift(det)) / norm
    u = UniPoly(f.system, f.var, big_u) * (cf.scale / norm)
    v = UniPoly(f.system, f.var, big_v) * (cg.scale / norm)
    if u * f + v * g != value:
        raise ArithmeticError("Resultant cofactor identity failed")
    return value, u, v


def _coefficient_list(poly: Any, degree: int, sub: Any) -> list[Any]:
    """Coefficients in the main variable, highest first, as elements of ``sub``."""
    parts: list[dict[tuple[int, ...], Any]] = [dict() for _ in range(degree + 1)]
    for m, c in poly.items():
        parts[degree - m[0]][m[1:]] = c
    return [sub.from_dict(p) for p in parts]


def squarefree_decomposition(f: UniPoly) -> SquarefreeDecomposition:
    """Yun's algorithm over the coefficient field (characteristic zero)."""
    if not f:
        raise UsageError("Squarefree decomposition of the zero polynomial")
    unit = f.lc()
    if f.degree() == 0:
        return SquarefreeDecomposition(unit, [])
    g = f.monic()
    dg = g.derivative()
    b = gcd_uni(g, dg)
    c = g.exquo(b)
    d = dg.exquo(b) - c.derivative()
    factors: list[tuple[UniPoly, int]] = []
    i = 1
    while c.degree() > 0:
        a = gcd_uni(c, d)
        if a.degree() > 0:
            factors.append((a, i))
        c = c.exquo(a)
        d = d.exquo(a) - c.derivative()
        i += 1
    logger.debug("Squarefree decomposition of degree %d: multiplicities %s", f.degree(), [m for _, m in factors])
    return SquarefreeDecomposition(unit, factors)


def bezout(f: UniPoly, g: UniPoly) -> tuple[UniPoly, UniPoly, UniPoly]:
    """``(u, v, h)`` with ``u*f + v*g = h`` and ``h`` the monic gcd."""
    _check_pair(f, g)
    s, t, h = f.poly.gcdex(g.poly)
    return UniPoly(f.system, f.var, s), UniPoly(f.system, f.var, t), UniPoly(f.system, f.var, h)
