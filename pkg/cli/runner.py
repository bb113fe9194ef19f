"""Pipeline runner: polytope to presentation to certificates, collected into a report."""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any

from loguru import logger
from pydantic import ValidationError

from arith import (
    DomainError,
    MPoly,
    ParamSystem,
    ParseError,
    UniPoly,
    UsageError,
    parse_mpoly,
    parse_relation,
)
from batyrev import (
    ConsistencyError,
    ReducedKind,
    UnsupportedModelError,
    cp2_collection,
    presentation,
    primitive_sets,
    reduce,
    verify_elimination,
)
from blowup import analyze, build, summand_checks, verify_E_products
from cli.schemas import (
    PROPERTY_CHECKS,
    Check,
    CertificateEntry,
    Command,
    ExitStatus,
    Report,
    RunConfig,
)
from products import ideal_as_tensor, kunneth_check
from ssalg import (
    Certificate,
    FDAlgebra,
    SizeError,
    Verdict,
    detect_case,
    field_summand_certificate,
    hexagon_certificate,
    is_semisimple_univariate,
    matches_ideal,
    radical_certificate,
    verify_certificate,
)
from toric import (
    MomentPolytope,
    NotFanoError,
    ParameterError,
    PolytopeValidationError,
    classify_fano,
    polytope_from_json,
    standard_model,
    validate,
)

INPUT_ERRORS: tuple[type[Exception], ...] = (
    UsageError,
    DomainError,
    ParameterError,
    PolytopeValidationError,
    NotFanoError,
    UnsupportedModelError,
    SizeError,
    ValidationError,
    OSError,
)

# Verdicts that establish each requested property.
SATISFIES: dict[Check, frozenset[Verdict]] = {
    Check.semisimple: frozenset({Verdict.SEMISIMPLE, Verdict.RADICAL_IDEAL}),
    Check.field_summand: frozenset(
        {Verdict.CONTAINS_FIELD_SUMMAND, Verdict.SEMISIMPLE, Verdict.RADICAL_IDEAL}
    ),
}


def load_json(path: Path) -> Any:
    """Read a JSON file; syntax errors carry the line and column."""
    text = path.read_text(encoding="utf-8")
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"{path}: {e.msg}", e.lineno, e.colno) from e


def _record(report: Report, cert: Certificate, check: Check | None) -> None:
    verified = verify_certificate(cert)
    report.certificates.append(
        CertificateEntry(
            check=check, verdict=cert.verdict.value, verified=verified, certificate=cert.to_json()
        )
    )
    logger.info(
        "Certificate check={} verdict={} verified={}",
        check.value if check else "-",
        cert.verdict.value,
        verified,
    )


def _as_summand(cert: Certificate) -> Certificate:
    if cert.verdict in (Verdict.SEMISIMPLE, Verdict.RADICAL_IDEAL):
        return Certificate(
            Verdict.CONTAINS_FIELD_SUMMAND,
            cert.subject,
            parts=(cert,),
            note="semisimple: the whole quotient is a product of fields",
        )
    if cert.verdict is Verdict.NOT_SEMISIMPLE:
        return Certificate(
            Verdict.INCONCLUSIVE,
            cert.subject,
            parts=(cert,),
            note="no field-summand witness for a non-reduced ideal in two generators",
        )
    return cert


def _ideal_certificate(report: Report, generators: tuple[MPoly, MPoly]) -> Certificate:
    """Route a two-generator ideal: the hexagon cases, a split ideal, or plain elimination."""
    system = generators[0].system
    if matches_ideal(generators, system):
        report.add(
            "hexagon_cases",
            {side: detect_case(system, side).value for side in ("A", "B")},
        )
        return hexagon_certificate(system)
    split = ideal_as_tensor(generators)
    if split is not None:
        moduli = (split.left.modulus, split.right.modulus)
        report.add("tensor_factors", [m.to_text() for m in moduli if m is not None])
        return kunneth_check(split.left, split.right)
    return radical_certificate(generators)


def certify_generators(
    report: Report, generators: tuple[MPoly, ...], variables: tuple[str, ...], checks: list[Check]
) -> None:
    """Certificates for every requested property of ``K[variables]/(generators)``."""
    wanted = [c for c in PROPERTY_CHECKS if c in checks]
    if len(generators) == 1:
        f = UniPoly.from_mpoly(generators[0], variables[0])
        for check in wanted:
            if check is Check.semisimple:
                _record(report, is_semisimple_univariate(f), check)
            else:
                _record(report, field_summand_certificate(f), check)
        return
    if len(generators) != 2:
        raise UsageError(f"Expected one or two generators, got {len(generators)}")
    cert = _ideal_certificate(report, (generators[0], generators[1]))
    for check in wanted:
        _record(report, cert if check is Check.semisimple else _as_summand(cert), check)


def _polytope(config: RunConfig) -> MomentPolytope:
    if config.command is Command.model:
        assert config.model is not None
        return standard_model(config.model, config.params)
    assert config.polytope_path is not None
    return polytope_from_json(load_json(config.polytope_path))


def _run_polytope(config: RunConfig, report: Report) -> None:
    polytope = _polytope(config)
    report.add("polytope", polytope.to_json())
    checks = config.checks

    if Check.validate in checks:
        v = validate(polytope)
        report.add(
            "validation",
            {"delzant": v.delzant, "fano": v.fano, "bad_vertices": [list(p) for p in v.bad_vertices]},
        )
        if not v.delzant:
            raise PolytopeValidationError(
                f"Adjacent normals are not lattice bases at facets {list(v.bad_vertices)}"
            )
        if not v.fano:
            raise NotFanoError("The facet normals are not the vertices of a Fano polygon")

    if Check.classify in checks:
        fano = classify_fano(polytope)
        report.add(
            "classification",
            {
                "tag": fano.tag.value,
                "matrix": [list(row) for row in fano.matrix],
                "facet_map": list(fano.facet_map),
                "verified": fano.verify(polytope),
            },
        )

    if Check.presentation not in checks:
        return
    sets = [cp2_collection(polytope)] if polytope.size == 3 else primitive_sets(polytope)
    report.add(
        "primitive_sets",
        [
            {"set": ps.label, "w": list(ps.w), "cone": list(ps.cone), "coeffs": list(ps.coeffs)}
            for ps in sets
        ],
    )
    pres = presentation(polytope)
    report.add("presentation", pres.to_json())
    report.add(
        "relations",
        {
            "additive": pres.additive_texts(),
            "multiplicative": pres.relation_texts(),
            "normalized": pres.normalized_texts(),
        },
    )

    if Check.reduce not in checks:
        return
    reduced = reduce(pres, config.normalization, config.relations)
    data = reduced.to_json()
    if not verify_elimination(reduced, pres):
        raise ConsistencyError("Reduced generators do not lie in the presentation ideal")
    if reduced.kind is ReducedKind.UNIVARIATE:
        data["quotient"] = reduced.quotient.to_text()
    report.add("reduced", data)
    certify_generators(report, reduced.generators, reduced.survivors, checks)


def _run_blowup(config: RunConfig, report: Report) -> None:
    assert config.n is not None
    alg = build(config.n)
    cert = analyze(alg)
    identities = summand_checks(alg)
    report.add(
        "blowup",
        {
            "n": alg.n,
            "quotient": alg.quotient.to_text(),
            "A": alg.a.to_text(),
            "B": alg.b.to_text(),
            "E_products": verify_E_products(alg),
            "summand_checks": vars(identities),
        },
    )
    summand = cert.parts[1]
    _record(report, cert, Check.semisimple if Check.semisimple in config.checks else None)
    _record(report, summand, Check.field_summand if Check.field_summand in config.checks else None)


def _run_tensor(config: RunConfig, report: Report) -> None:
    assert config.left_path is not None and config.right_path is not None
    left = FDAlgebra.from_json(load_json(config.left_path))
    right = FDAlgebra.from_json(load_json(config.right_path))
    report.add("factors", {"left": left.to_json(), "right": right.to_json()})
    cert = kunneth_check(left, right)
    if not config.checks:
        _record(report, cert, None)
    for check in config.checks:
        _record(report, cert if check is Check.semisimple else _as_summand(cert), check)


def _certify_system(config: RunConfig) -> ParamSystem:
    variables = config.variables or (["X"] if len(config.polys) == 1 else ["A", "B"])
    system = ParamSystem.of(*config.poly_params, generators=variables)
    for text in config.relations:
        system = system.with_relations([parse_relation(text, system)])
    return system


def _run_certify(config: RunConfig, report: Report) -> None:
    system = _certify_system(config)
    generators = tuple(parse_mpoly(text, system) for text in config.polys)
    report.add(
        "input",
        {
            "variables": list(system.generators),
            "params": list(system.active_params),
            "relations": list(config.relations),
            "generators": [g.to_text() for g in generators],
        },
    )
    certify_generators(report, generators, system.generators, config.checks or [Check.semisimple])


_HANDLERS = {
    Command.model: _run_polytope,
    Command.polytope: _run_polytope,
    Command.blowup: _run_blowup,
    Command.tensor: _run_tensor,
    Command.certify: _run_certify,
}


def _status(report: Report) -> ExitStatus:
    if any(not e.verified for e in report.certificates):
        report.errors.append("A certificate failed re-verification")
        return ExitStatus.INTERNAL
    verdicts = [(e.check, Verdict(e.verdict)) for e in report.certificates]
    if any(
        check is not None and v is not Verdict.INCONCLUSIVE and v not in SATISFIES[check]
        for check, v in verdicts
    ):
        return ExitStatus.CONTRADICTED
    if any(v is Verdict.INCONCLUSIVE for _, v in verdicts):
        return ExitStatus.INCONCLUSIVE
    return ExitStatus.OK


def run(config: RunConfig) -> Report:
    """Run one command; errors end up in the report with their exit status."""
    report = Report(command=config.command)
    logger.info(
        "Run started command={} checks={}", config.command.value, [c.value for c in config.checks]
    )
    try:
        _HANDLERS[config.command](config, report)
    except INPUT_ERRORS as e:
        logger.error("Input rejected command={}: {}", config.command.value, e)
        report.fail(ExitStatus.INPUT, str(e))
    except Exception as e:
        logger.exception("Run failed command={}: {}", config.command.value, e)
        report.fail(ExitStatus.INTERNAL, f"{type(e).__name__}: {e}")
    else:
        report.status = _status(report)
    logger.info("Run finished command={} status={}", config.command.value, int(report.status))
    return report
