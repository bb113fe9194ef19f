"""Command-line entry point: ``toric-qh <command> [options]``."""

from dotenv import load_dotenv

load_dotenv()

import argparse
import logging
import sys
from pathlib import Path

from pydantic import ValidationError

from batyrev import Normalization
from cli.runner import run
from cli.schemas import Check, Command, EmitFormat, ExitStatus, RunConfig
from config import settings
from toric import MODEL_PARAMS

logger = logging.getLogger(__name__)

_MODEL_FLAGS = tuple(sorted({name for names in MODEL_PARAMS.values() for name in names}))


def _split(values: list[str] | None) -> list[str]:
    """Flatten repeated and comma-separated option values."""
    return [v.strip() for raw in values or [] for v in raw.split(",") if v.strip()]


def _parse_args(argv: list[str] | None = None) -> argparse.Namespace:
    parser = argparse.ArgumentParser(
        prog="toric-qh",
        description="Quantum homology presentations and semi-simplicity certificates "
        "for toric Fano surfaces.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--check",
        dest="checks",
        action="append",
        help=f"Requested checks, repeatable or comma-separated: {', '.join(c.value for c in Check)}",
    )
    common.add_argument("--emit", choices=[e.value for e in EmitFormat], default=None)
    common.add_argument("--out", type=Path, help="Write the report here instead of stdout")
    common.add_argument(
        "--relations",
        action="append",
        help='Declared parameter relations, e.g. "y=z" or "xyz=1"',
    )
    common.add_argument(
        "--normalization",
        choices=[n.value for n in Normalization],
        default=Normalization.AUTO.value,
    )

    sub = parser.add_subparsers(dest="command", required=True)
    model = sub.add_parser("model", parents=[common], help="One of the five standard models")
    model.add_argument("--name", required=True, help="cp2, s2xs2, cp2-bl1, cp2-bl2 or cp2-bl3")
    for name in _MODEL_FLAGS:
        model.add_argument(f"--{name}", help="Exact rational, e.g. 2/3")

    polytope = sub.add_parser("polytope", parents=[common], help="A polygon read from JSON")
    polytope.add_argument("--file", type=Path, required=True)

    blowup = sub.add_parser("blowup", parents=[common], help="The one-point blow-up algebra")
    blowup.add_argument("--n", type=int, required=True)

    tensor = sub.add_parser("tensor", parents=[common], help="Tensor product of two algebras")
    tensor.add_argument("--left", type=Path, required=True)
    tensor.add_argument("--right", type=Path, required=True)

    certify = sub.add_parser("certify", parents=[common], help="A quotient given by polynomials")
    certify.add_argument("--poly", action="append", required=True)
    certify.add_argument("--variable", action="append", help="Generator of each --poly")
    certify.add_argument("--params", action="append", help="Parameter names, comma-separated")
    return parser.parse_args(argv)


def _config(args: argparse.Namespace) -> RunConfig:
    fields: dict = {
        "command": args.command,
        "checks": _split(args.checks),
        "relations": _split(args.relations),
        "normalization": args.normalization,
        "out": args.out,
    }
    if args.emit:
        fields["emit"] = args.emit
    command = Command(args.command)
    if command is Command.model:
        fields["model"] = args.name
        fields["params"] = {
            name: getattr(args, name) for name in _MODEL_FLAGS if getattr(args, name) is not None
        }
    elif command is Command.polytope:
        fields["polytope_path"] = args.file
    elif command is Command.blowup:
        fields["n"] = args.n
    elif command is Command.tensor:
        fields["left_path"] = args.left
        fields["right_path"] = args.right
    else:
        fields["polys"] = args.poly
        fields["variables"] = _split(args.variable)
        fields["poly_params"] = _split(args.params)
    return RunConfig(**fields)


def main(argv: list[str] | None = None) -> int:
    logging.basicConfig(
        level=settings.log_level,
        format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
        datefmt="%Y-%m-%d %H:%M:%S",
        force=True,
    )
    args = _parse_args(argv)
    try:
        config = _config(args)
    except ValidationError as e:
        logger.error("Invalid arguments: %s", e)
        return int(ExitStatus.INPUT)

    report = run(config)
    text = report.render(config.emit)
    if config.out is not None:
        config.out.parent.mkdir(parents=True, exist_ok=True)
        config.out.write_text(text, encoding="utf-8")
        logger.info("Report written to %s", config.out)
    else:
        sys.stdout.write(text)
    return int(report.status)


if __name__ == "__main__":
    sys.exit(main())
