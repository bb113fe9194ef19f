"""Batyrev presentations of quantum homology and their reduction to polynomial quotients."""

from batyrev.errors import ConsistencyError, UnsupportedModelError
from batyrev.presentation import QHPresentation, presentation
from batyrev.primitive import PrimitiveSet, cp2_collection, primitive_sets
from batyrev.reduce import (
    Normalization,
    ReducedKind,
    ReducedPresentation,
    ResultantComparison,
    monotone_center,
    reduce,
    resultant_comparison,
    verify_elimination,
)
from batyrev.relations import QuantumRelation, mult_relation

__all__ = [
    "ConsistencyError",
    "Normalization",
    "PrimitiveSet",
    "QHPresentation",
    "QuantumRelation",
    "ReducedKind",
    "ReducedPresentation",
    "ResultantComparison",
    "UnsupportedModelError",
    "cp2_collection",
    "monotone_center",
    "mult_relation",
    "presentation",
    "primitive_sets",
    "reduce",
    "resultant_comparison",
    "verify_elimination",
]
