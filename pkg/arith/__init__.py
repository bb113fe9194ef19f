"""Exact arithmetic: rationals, Laurent polynomials, the parameter field, univariate algorithms."""

from arith.algorithms import (
    SquarefreeDecomposition,
    bezout,
    clear_denominators,
    gcd_uni,
    resultant_uni,
    resultant_with_cofactors,
    squarefree_decomposition,
    sylvester_determinant,
    sylvester_matrix,
)
from arith.errors import DomainError, ParseError, UsageError
from arith.field import FieldElem
from arith.linear import LinearForm
from arith.mpoly import MPoly
from arith.params import ExponentParam, MonomialRelation, ParamSystem, parse_relation
from arith.rational import format_rational, parse_rational
from arith.serialize import parse_field, parse_linear_form, parse_mpoly, parse_unipoly
from arith.unipoly import UniPoly

__all__ = [
    "DomainError",
    "ExponentParam",
    "FieldElem",
    "LinearForm",
    "MPoly",
    "MonomialRelation",
    "ParamSystem",
    "ParseError",
    "SquarefreeDecomposition",
    "UniPoly",
    "UsageError",
    "bezout",
    "clear_denominators",
    "format_rational",
    "gcd_uni",
    "parse_field",
    "parse_linear_form",
    "parse_mpoly",
    "parse_rational",
    "parse_relation",
    "parse_unipoly",
    "resultant_uni",
    "resultant_with_cofactors",
    "squarefree_decomposition",
    "sylvester_determinant",
    "sylvester_matrix",
]
