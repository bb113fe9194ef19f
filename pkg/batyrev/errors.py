"""Exceptions raised while generating quantum homology presentations."""


class UnsupportedModelError(ValueError):
    """The polygon is outside what the primitive-set recipe handles."""


class ConsistencyError(RuntimeError):
    """An internal invariant of the recipe failed (non-integral cone coefficients, degree imbalance)."""
