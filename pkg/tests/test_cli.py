"""Tests for the pipeline runner, run configuration and the command-line entry point."""

import json
from pathlib import Path

import pytest
from pydantic import ValidationError

from batyrev import QHPresentation
from cli import Check, Command, ExitStatus, RunConfig, close_checks, run
from cli.main import main
from ssalg import Verdict

PENTAGON = {"eps": "2/3", "delta": "3/4"}
HEXAGON = {"alpha": "1/3", "beta": "2/3", "gamma": "2/3"}


def _model(name: str, params: dict, **kwargs) -> RunConfig:
    return RunConfig(command=Command.model, model=name, params=params, **kwargs)


class TestRunConfig:
    """Validation of run configurations."""

    def test_checks_closed(self) -> None:
        """A property check pulls in every stage before it."""
        assert close_checks([Check.semisimple]) == [
            Check.validate,
            Check.classify,
            Check.presentation,
            Check.reduce,
            Check.semisimple,
        ]

    def test_model_default_checks(self) -> None:
        """Model runs default to the semisimple check."""
        config = _model("cp2-bl2", PENTAGON)
        assert config.checks[-1] is Check.semisimple
        assert Check.field_summand not in config.checks

    def test_missing_input(self) -> None:
        """Each command names its required input."""
        with pytest.raises(ValidationError, match="needs model"):
            RunConfig(command=Command.model)

    def test_polytope_checks_on_blowup(self) -> None:
        """Polygon stages do not apply to the blow-up."""
        with pytest.raises(ValidationError, match="apply only to model and polytope"):
            RunConfig(command=Command.blowup, n=3, checks=[Check.validate])

    def test_decimal_parameter(self) -> None:
        """Parameters must be exact."""
        with pytest.raises(ValidationError, match="Parameter eps"):
            _model("cp2-bl2", {"eps": "0.6", "delta": "3/4"})


class TestModelRuns:
    """The model command end to end."""

    def test_pentagon(self) -> None:
        """The two-point blow-up reduces to a semisimple univariate quotient."""
        report = run(_model("cp2-bl2", PENTAGON))
        assert report.status is ExitStatus.OK
        assert [s.name for s in report.sections] == [
            "polytope",
            "validation",
            "classification",
            "primitive_sets",
            "presentation",
            "relations",
            "reduced",
        ]
        assert report.section("classification")["tag"] == "CP2_bl2"
        assert report.section("reduced")["kind"] == "univariate"
        (entry,) = report.certificates
        assert entry.check is Check.semisimple
        assert entry.verdict == Verdict.SEMISIMPLE.value
        assert entry.verified

    def test_presentation_round_trip(self) -> None:
        """The presentation section reads back into the same relations."""
        report = run(_model("cp2-bl2", PENTAGON, checks=[Check.presentation]))
        pres = QHPresentation.from_json(report.section("presentation"))
        assert pres.relation_texts() == report.section("relations")["multiplicative"]
        assert report.certificates == []

    def test_hexagon_xyz_one(self) -> None:
        """With ``xyz = 1`` declared the three-point blow-up ideal is radical."""
        report = run(_model("cp2-bl3", HEXAGON, relations=["xyz=1"]))
        assert report.status is ExitStatus.OK
        assert report.section("hexagon_cases") == {"A": "xyz=1", "B": "xyz=1"}
        (entry,) = report.certificates
        assert entry.verdict == Verdict.RADICAL_IDEAL.value

    @pytest.mark.slow
    def test_hexagon_y_equals_z(self) -> None:
        """Declaring ``y = z`` specializes the A side only."""
        report = run(_model("cp2-bl3", HEXAGON, relations=["y=z"]))
        assert report.status is ExitStatus.OK
        assert report.section("hexagon_cases") == {"A": "y=z", "B": "generic"}
        (entry,) = report.certificates
        assert entry.verdict == Verdict.RADICAL_IDEAL.value
        assert entry.verified

    def test_parameter_violation(self) -> None:
        """Out-of-range parameters end the run with an input error."""
        report = run(_model("cp2-bl2", {"eps": "1/4", "delta": "1/4"}))
        assert report.status is ExitStatus.INPUT
        assert "Parameter constraint violated" in report.errors[0]

    def test_byte_stable(self) -> None:
        """Two runs render the same JSON."""
        config = _model("cp2-bl2", PENTAGON, checks=[Check.presentation])
        first = run(config).to_json_text()
        assert run(config).to_json_text() == first
        assert json.loads(first)["status"] == 0

    def test_text_report(self) -> None:
        """The text form starts with the command and status."""
        text = run(_model("cp2", {"scale": "1"}, checks=[Check.classify])).to_text()
        assert text.startswith("command: model\nstatus: 0 (OK)\n")
        assert "[classification]" in text


class TestOtherCommands:
    """Blow-up, tensor, certify and polytope runs."""

    def test_blowup(self) -> None:
        """Not semisimple, with a field summand."""
        report = run(RunConfig(command=Command.blowup, n=3))
        assert report.status is ExitStatus.OK
        assert [e.verdict for e in report.certificates] == [
            Verdict.NOT_SEMISIMPLE.value,
            Verdict.CONTAINS_FIELD_SUMMAND.value,
        ]
        assert all(e.verified for e in report.certificates)
        assert report.section("blowup")["E_products"]

    def test_blowup_semisimple_contradicted(self) -> None:
        """Asking for semi-simplicity of the blow-up is contradicted."""
        report = run(
            RunConfig(command=Command.blowup, n=3, checks=[Check.semisimple, Check.field_summand])
        )
        assert report.status is ExitStatus.CONTRADICTED

    @pytest.mark.parametrize(
        ("poly", "check", "status"),
        [
            ("X^2 - 1", Check.semisimple, ExitStatus.OK),
            ("X^2", Check.semisimple, ExitStatus.CONTRADICTED),
            ("(X - 1)^2*(X + 1)", Check.field_summand, ExitStatus.OK),
            ("X^2", Check.field_summand, ExitStatus.INCONCLUSIVE),
        ],
    )
    def test_certify_univariate(self, poly: str, check: Check, status: ExitStatus) -> None:
        """Exit status follows the verdict for the requested property."""
        report = run(RunConfig(command=Command.certify, polys=[poly], checks=[check]))
        assert report.status is status

    def test_certify_split_ideal(self) -> None:
        """An ideal in separate generators is certified as a tensor product."""
        report = run(RunConfig(command=Command.certify, polys=["A^2 - 1", "B^2 - 2"]))
        assert report.status is ExitStatus.OK
        assert report.section("tensor_factors") == ["A^2 - 1", "B^2 - 2"]

    def test_tensor_files(self, tmp_path: Path) -> None:
        """Factors are read from JSON files."""
        left, right = tmp_path / "left.json", tmp_path / "right.json"
        left.write_text(json.dumps({"variable": "X", "quotient": "X^2 - 1", "odd_vanishing": True}))
        right.write_text(json.dumps({"variable": "Y", "quotient": "Y^2", "odd_vanishing": True}))
        report = run(
            RunConfig(
                command=Command.tensor, left_path=left, right_path=right, checks=[Check.semisimple]
            )
        )
        assert report.status is ExitStatus.CONTRADICTED
        assert report.certificates[0].verdict == Verdict.NOT_SEMISIMPLE.value

    def test_polytope_json_error(self, tmp_path: Path) -> None:
        """Malformed JSON reports its position."""
        path = tmp_path / "bad.json"
        path.write_text('{"vertices": [[0, 0],\n  oops]}')
        report = run(RunConfig(command=Command.polytope, polytope_path=path))
        assert report.status is ExitStatus.INPUT
        assert "line 2" in report.errors[0]

    def test_polytope_file(self, tmp_path: Path) -> None:
        """A polygon from JSON goes through the same pipeline."""
        path = tmp_path / "square.json"
        path.write_text(json.dumps({"vertices": [[0, 0], [1, 0], [1, 1], [0, 1]]}))
        report = run(RunConfig(command=Command.polytope, polytope_path=path, checks=[Check.classify]))
        assert report.status is ExitStatus.OK
        assert report.section("classification")["tag"] == "S2xS2"


class TestMain:
    """Argument parsing and report output."""

    def test_out_file(self, tmp_path: Path) -> None:
        """The JSON report is written to ``--out``."""
        out = tmp_path / "reports" / "pentagon.json"
        argv = ["model", "--name", "cp2-bl2", "--eps", "2/3", "--delta", "3/4"]
        assert main([*argv, "--check", "presentation", "--emit", "json", "--out", str(out)]) == 0
        data = json.loads(out.read_text())
        assert data["command"] == "model"
        assert data["sections"][0]["name"] == "polytope"

    def test_bad_argument(self) -> None:
        """A decimal parameter is an input error."""
        assert main(["model", "--name", "cp2-bl2", "--eps", "0.6", "--delta", "3/4"]) == 2

    def test_stdout(self, capsys: pytest.CaptureFixture[str]) -> None:
        """Without ``--out`` the report goes to stdout."""
        assert main(["blowup", "--n", "2", "--emit", "text"]) == 0
        assert capsys.readouterr().out.startswith("command: blowup\n")
