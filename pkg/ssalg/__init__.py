"""Certified semi-simplicity, nilpotent and field-summand verdicts for finite-dimensional algebras."""

from ssalg.certificate import (
    Certificate,
    IdempotentWitness,
    MembershipWitness,
    NilpotentWitness,
    NonvanishingWitness,
    ResultantWitness,
    SummandWitness,
    TraceFormWitness,
    Verdict,
    WitnessKind,
)
from ssalg.crt import crt_idempotents
from ssalg.elimination import elimination_resultant
from ssalg.errors import MembershipError, SizeError
from ssalg.fdalgebra import FDAlgebra, univariate_quotient
from ssalg.hexagon import (
    CaseCheck,
    CaseElimination,
    HexagonCase,
    case_checks,
    case_member,
    declared_loci,
    detect_case,
    hexagon_certificate,
    hexagon_ideal,
    matches_ideal,
)
from ssalg.nonvanishing import nonvanishing_test, strip_nonzero
from ssalg.seidenberg import radical_certificate, seidenberg_radical_check
from ssalg.substitution import (
    check_substitution_homomorphism,
    projective_space_table,
    toy_monotone_tables,
)
from ssalg.trace_form import gram_matrix, trace_form_semisimple
from ssalg.univariate import (
    field_summand_certificate,
    is_semisimple_univariate,
    nilpotent_witness,
    resultant_witness,
)
from ssalg.verify import verify_certificate

__all__ = [
    "CaseCheck",
    "CaseElimination",
    "Certificate",
    "FDAlgebra",
    "HexagonCase",
    "IdempotentWitness",
    "MembershipError",
    "MembershipWitness",
    "NilpotentWitness",
    "NonvanishingWitness",
    "ResultantWitness",
    "SizeError",
    "SummandWitness",
    "TraceFormWitness",
    "Verdict",
    "WitnessKind",
    "case_checks",
    "case_member",
    "check_substitution_homomorphism",
    "crt_idempotents",
    "declared_loci",
    "detect_case",
    "elimination_resultant",
    "field_summand_certificate",
    "gram_matrix",
    "hexagon_certificate",
    "hexagon_ideal",
    "is_semisimple_univariate",
    "matches_ideal",
    "nilpotent_witness",
    "nonvanishing_test",
    "projective_space_table",
    "radical_certificate",
    "resultant_witness",
    "seidenberg_radical_check",
    "strip_nonzero",
    "toy_monotone_tables",
    "trace_form_semisimple",
    "univariate_quotient",
    "verify_certificate",
]
