"""Command-line pipeline and report emitter."""

from cli.runner import certify_generators, load_json, run
from cli.schemas import (
    Check,
    CertificateEntry,
    Command,
    EmitFormat,
    ExitStatus,
    Report,
    RunConfig,
    Section,
    close_checks,
)

__all__ = [
    "CertificateEntry",
    "Check",
    "Command",
    "EmitFormat",
    "ExitStatus",
    "Report",
    "RunConfig",
    "Section",
    "certify_generators",
    "close_checks",
    "load_json",
    "run",
]
