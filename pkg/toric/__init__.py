"""Moment polygons, Delzant/Fano validation and the five toric Fano surfaces."""

from toric.classify import TEMPLATES, FanoClass, FanoTag, classify_fano
from toric.errors import NotFanoError, ParameterError, PolytopeValidationError
from toric.models import MODEL_PARAMS, standard_model
from toric.polytope import (
    Facet,
    Fan,
    MomentPolytope,
    Numbering,
    Validation,
    build_polytope,
    polytope_from_json,
    validate,
)

__all__ = [
    "MODEL_PARAMS",
    "TEMPLATES",
    "Facet",
    "Fan",
    "FanoClass",
    "FanoTag",
    "MomentPolytope",
    "NotFanoError",
    "Numbering",
    "ParameterError",
    "PolytopeValidationError",
    "Validation",
    "build_polytope",
    "polytope_from_json",
    "classify_fano",
    "standard_model",
    "validate",
]
