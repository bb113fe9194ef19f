"""Exceptions raised while building and classifying moment polygons."""


class PolytopeValidationError(ValueError):
    """The vertex list does not describe a convex, simple, rational polygon."""


class ParameterError(ValueError):
    """A standard model was asked for with parameters outside its admissible range."""


class NotFanoError(ValueError):
    """The fan of the polygon matches none of the five toric Fano surfaces."""
