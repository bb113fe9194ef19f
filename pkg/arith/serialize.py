"""Reading polynomials from the canonical text form (and ordinary sympy syntax)."""

from __future__ import annotations

import re
from fractions import Fraction
from tokenize import TokenError
from typing import Any

from sympy import QQ, Symbol, grlex
from sympy.parsing.sympy_parser import convert_xor, parse_expr, standard_transformations
from sympy.polys.fields import FracField

from arith.errors import ParseError, UsageError
from arith.field import FieldElem
from arith.linear import LinearForm
from arith.mpoly import MPoly
from arith.params import ParamSystem
from arith.rational import from_qq, parse_rational
from arith.unipoly import UniPoly

_TRANSFORMS = standard_transformations + (convert_xor,)
_IDENT = re.compile(r"[A-Za-z_][A-Za-z_0-9]*")


def _parse(text: str, names: tuple[str, ...]) -> Any:
    if not text or not text.strip():
        raise ParseError("Empty polynomial text")
    local = {n: Symbol(n) for n in names}
    try:
        expr = parse_expr(text, local_dict=local, transformations=_TRANSFORMS, evaluate=True)
    except SyntaxError as e:
        raise ParseError(f"Cannot parse {text!r}: {e.msg}", e.lineno or 1, e.offset or 1) from e
    except TokenError as e:
        line, col = e.args[1] if len(e.args) > 1 else (1, len(text))
        raise ParseError(f"Cannot parse {text!r}: {e.args[0]}", line, col) from e
    unknown = sorted(str(s) for s in getattr(expr, "free_symbols", ()) if str(s) not in names)
    if unknown:
        raise ParseError(f"Unknown variables {', '.join(unknown)} in {text!r}")
    field = FracField(list(names), QQ, grlex)
    try:
        return field.from_expr(expr)
    except ValueError as e:
        raise ParseError(f"{text!r} is not a rational function of {', '.join(names)}") from e


def _named_terms(
    poly: Any, names: tuple[str, ...], shift: tuple[int, ...], scale: Any
) -> list[tuple[dict[str, int], Any]]:
    out = []
    for m, c in poly.items():
        exps = {n: e - d for n, e, d in zip(names, m, shift) if e - d}
        out.append((exps, from_qq(c) / scale))
    return out


def parse_mpoly(text: str, system: ParamSystem) -> MPoly:
    """Parse a Laurent polynomial; the denominator must be a monomial.

    Eliminated parameters may be used; declared relations are applied.
    """
    names = system.generators + system.param_names
    frac = _parse(text, names)
    if len(frac.denom) != 1:
        raise ParseError(f"{text!r} has a non-monomial denominator")
    ((shift, dc),) = frac.denom.items()
    return MPoly.from_named_terms(system, _named_terms(frac.numer, names, shift, from_qq(dc)))


def parse_field(text: str, system: ParamSystem) -> FieldElem:
    """Parse a rational function of the parameters."""
    names = system.param_names
    frac = _parse(text, names)
    zero = (0,) * len(names)
    numer = MPoly.from_named_terms(system, _named_terms(frac.numer, names, zero, 1))
    denom = MPoly.from_named_terms(system, _named_terms(frac.denom, names, zero, 1))
    if not denom:
        raise ParseError(f"{text!r} has a zero denominator")
    return FieldElem.from_parts(numer, denom)


def parse_unipoly(text: str, system: ParamSystem, var: str) -> UniPoly:
    return UniPoly.from_mpoly(parse_mpoly(text, system), var)


def parse_linear_form(text: str) -> LinearForm:
    """Read ``"1 - eps"`` or ``"2/3"`` into a ``LinearForm`` over its symbols."""
    if not text or not text.strip():
        raise ParseError("Empty exponent text")
    names = tuple(sorted(set(_IDENT.findall(text))))
    if not names:
        try:
            return LinearForm(parse_rational(text))
        except UsageError as e:
            raise ParseError(str(e)) from e
    frac = _parse(text, names)
    if len(frac.denom) != 1 or not frac.denom.is_ground:
        raise ParseError(f"{text!r} is not linear in {', '.join(names) or 'its symbols'}")
    scale = from_qq(frac.denom.LC)
    const = Fraction(0)
    coeffs: list[tuple[str, Fraction]] = []
    for m, c in frac.numer.items():
        if sum(m) > 1:
            raise ParseError(f"{text!r} is not linear in {', '.join(names)}")
        value = from_qq(c) / scale
        if sum(m) == 0:
            const = value
        else:
            coeffs.append((names[m.index(1)], value))
    coeffs.sort(key=lambda t: names.index(t[0]))
    return LinearForm(const, tuple(coeffs))
