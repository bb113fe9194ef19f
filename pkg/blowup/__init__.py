"""One-point blow-up algebras: a field summand without semi-simplicity."""

from blowup.algebra import (
    BlowupAlgebra,
    SummandChecks,
    a_is_zero_divisor,
    analyze,
    build,
    summand_checks,
    verify_E_products,
)

__all__ = [
    "BlowupAlgebra",
    "SummandChecks",
    "a_is_zero_divisor",
    "analyze",
    "build",
    "summand_checks",
    "verify_E_products",
]
