"""Run configuration and report schemas."""

from __future__ import annotations

import json
from enum import Enum, IntEnum
from pathlib import Path
from typing import Any

from pydantic import BaseModel, Field, field_validator, model_validator

from arith import UsageError, parse_rational
from batyrev import Normalization
from config import settings


class Command(str, Enum):
    """Pipeline entry points."""

    model = "model"
    polytope = "polytope"
    blowup = "blowup"
    tensor = "tensor"
    certify = "certify"


class Check(str, Enum):
    """Pipeline stages a run may request, in execution order."""

    validate = "validate"
    classify = "classify"
    presentation = "presentation"
    reduce = "reduce"
    semisimple = "semisimple"
    field_summand = "field-summand"


class EmitFormat(str, Enum):
    json = "json"
    text = "text"


class ExitStatus(IntEnum):
    OK = 0
    INTERNAL = 1
    INPUT = 2
    INCONCLUSIVE = 3
    CONTRADICTED = 4


CHECK_DEPENDENCIES: dict[Check, tuple[Check, ...]] = {
    Check.validate: (),
    Check.classify: (Check.validate,),
    Check.presentation: (Check.classify,),
    Check.reduce: (Check.presentation,),
    Check.semisimple: (Check.reduce,),
    Check.field_summand: (Check.reduce,),
}

# Checks that only make sense on a polygon.
POLYTOPE_CHECKS = frozenset({Check.validate, Check.classify, Check.presentation, Check.reduce})

# Properties that produce certificates.
PROPERTY_CHECKS = (Check.semisimple, Check.field_summand)


def close_checks(checks: list[Check]) -> list[Check]:
    """Add every prerequisite and return the checks in execution order."""
    closed: set[Check] = set()
    pending = list(checks)
    while pending:
        check = pending.pop()
        if check not in closed:
            closed.add(check)
            pending.extend(CHECK_DEPENDENCIES[check])
    return [c for c in Check if c in closed]


class RunConfig(BaseModel):
    """Everything one run needs; built by the argument parser or directly in tests."""

    command: Command
    model: str | None = Field(None, description="Model tag for the model command, e.g. cp2-bl2")
    params: dict[str, str] = Field(
        default_factory=dict, description="Named model parameters as exact rationals"
    )
    polytope_path: Path | None = Field(None, description="Polytope JSON for the polytope command")
    left_path: Path | None = Field(None, description="Left factor JSON for the tensor command")
    right_path: Path | None = Field(None, description="Right factor JSON for the tensor command")
    n: int | None = Field(None, description="Half the real dimension for the blowup command")
    polys: list[str] = Field(default_factory=list, description="Polynomial texts to certify")
    variables: list[str] = Field(default_factory=list, description="Generator names of --poly")
    poly_params: list[str] = Field(
        default_factory=list, description="Parameter names appearing in --poly"
    )
    checks: list[Check] = Field(default_factory=list)
    relations: list[str] = Field(
        default_factory=list, description='Declared parameter relations such as "y=z"'
    )
    normalization: Normalization = Normalization.AUTO
    emit: EmitFormat = Field(default_factory=lambda: EmitFormat(settings.emit_format))
    out: Path | None = None

    @field_validator("params")
    @classmethod
    def _exact_params(cls, v: dict[str, str]) -> dict[str, str]:
        for name, text in v.items():
            try:
                parse_rational(text)
            except UsageError as e:
                raise ValueError(f"Parameter {name}: {e}") from e
        return v

    @model_validator(mode="after")
    def _inputs_present(self) -> RunConfig:
        required = {
            Command.model: ("model", self.model),
            Command.polytope: ("polytope_path", self.polytope_path),
            Command.blowup: ("n", self.n),
            Command.tensor: ("left_path and right_path", self.left_path and self.right_path),
            Command.certify: ("polys", self.polys),
        }
        name, value = required[self.command]
        if not value:
            raise ValueError(f"The {self.command.value} command needs {name}")
        if self.command is Command.certify:
            if len(self.polys) > 2:
                raise ValueError("certify takes one polynomial or a two-generator ideal")
            if self.variables and len(self.variables) != len(self.polys):
                raise ValueError("Give one --variable per --poly")
        if self.command in (Command.model, Command.polytope):
            self.checks = close_checks(self.checks or [Check.semisimple])
        else:
            stray = sorted(c.value for c in self.checks if c in POLYTOPE_CHECKS)
            if stray:
                raise ValueError(f"{', '.join(stray)} apply only to model and polytope runs")
            self.checks = [c for c in Check if c in self.checks]
        return self


class Section(BaseModel):
    """One named artifact of the run."""

    name: str
    data: Any


class CertificateEntry(BaseModel):
    """A certificate with the property it was asked to establish (if any)."""

    check: Check | None = None
    verdict: str
    verified: bool
    certificate: dict[str, Any]


class Report(BaseModel):
    """Every artifact of a run in the order it was produced."""

    command: Command
    status: ExitStatus = ExitStatus.OK
    sections: list[Section] = Field(default_factory=list)
    certificates: list[CertificateEntry] = Field(default_factory=list)
    errors: list[str] = Field(default_factory=list)

    def add(self, name: str, data: Any) -> None:
        self.sections.append(Section(name=name, data=data))

    def section(self, name: str) -> Any:
        for s in self.sections:
            if s.name == name:
                return s.data
        raise KeyError(name)

    def fail(self, status: ExitStatus, message: str) -> None:
        self.status = status
        self.errors.append(message)

    def to_json_text(self) -> str:
        return json.dumps(self.model_dump(mode="json"), indent=settings.report_indent) + "\n"

    def to_text(self) -> str:
        indent = " " * settings.report_indent
        lines = [f"command: {self.command.value}", f"status: {self.status.value} ({self.status.name})"]
        for s in self.sections:
            lines.append(f"[{s.name}]")
            lines.extend(_text_lines(s.data, indent, 1))
        for entry in self.certificates:
            label = entry.check.value if entry.check else "certificate"
            lines.append(f"[{label}] {entry.verdict} (verified: {entry.verified})")
            lines.extend(_text_lines(entry.certificate, indent, 1))
        for message in self.errors:
            lines.append(f"error: {message}")
        return "\n".join(lines) + "\n"

    def render(self, emit: EmitFormat) -> str:
        return self.to_json_text() if emit is EmitFormat.json else self.to_text()


def _text_lines(data: Any, indent: str, depth: int) -> list[str]:
    pad = indent * depth
    if isinstance(data, dict):
        lines = []
        for key, value in data.items():
            if isinstance(value, (dict, list)) and value:
                lines.append(f"{pad}{key}:")
                lines.extend(_text_lines(value, indent, depth + 1))
            else:
                lines.append(f"{pad}{key}: {_scalar(value)}")
        return lines
    if isinstance(data, list):
        if all(not isinstance(v, (dict, list)) for v in data):
            return [f"{pad}- {_scalar(v)}" for v in data]
        lines = []
        for value in data:
            lines.append(f"{pad}-")
            lines.extend(_text_lines(value, indent, depth + 1))
        return lines
    return [f"{pad}{_scalar(data)}"]


def _scalar(value: Any) -> str:
    if isinstance(value, list):
        return "[" + ", ".join(_scalar(v) for v in value) + "]"
    if isinstance(value, dict):
        return "{}"
    if value is None:
        return "-"
    return str(value)
