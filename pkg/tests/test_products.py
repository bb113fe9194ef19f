"""Tests for tensor products of presented algebras."""

from unittest.mock import patch

import pytest

from arith import ParamSystem, UsageError
from products import algebra_certificate, kunneth_check, merge_systems, tensor
from ssalg import SizeError, Verdict, univariate_quotient, verify_certificate


@pytest.fixture
def quotient(uni):
    """``K[X]/(f)`` from the text of ``f``."""

    def build(text: str, odd_vanishing: bool | None = True):
        return univariate_quotient(uni(text), odd_vanishing)

    return build


class TestTensor:
    """Structure constants of the product."""

    def test_labels(self, quotient) -> None:
        """Basis pairs in row-major order."""
        alg = tensor(quotient("X^2 - 1"), quotient("X^2"))
        assert alg.dim == 4
        assert alg.labels == ("1*1", "1*X", "X*1", "X*X")
        assert alg.odd_vanishing is True

    def test_shared_parameters(self) -> None:
        """Equal parameters are shared and the base root is the lcm."""
        left = ParamSystem.of("x", generators=("X",), base_root=2)
        right = ParamSystem.of("x", generators=("Y",), base_root=3)
        merged = merge_systems(left, right)
        assert [p.name for p in merged.system.params] == ["s", "x"]
        assert merged.system.base_root == 6
        assert (merged.left_scale, merged.right_scale) == (3, 2)

    def test_clash_renamed(self) -> None:
        """A right parameter named like a left generator is renamed."""
        left = ParamSystem.of(generators=("X",))
        right = ParamSystem.of("X", generators=("Y",))
        assert merge_systems(left, right).right_rename == {"X": "X_2"}
        with pytest.raises(UsageError, match="different things"):
            merge_systems(left, right, rename=False)


class TestFactorCertificates:
    """Verdicts for single factors."""

    def test_semisimple(self, quotient) -> None:
        """``X^2 - 1`` is reduced."""
        assert algebra_certificate(quotient("X^2 - 1")).verdict is Verdict.SEMISIMPLE

    def test_field_summand(self, quotient) -> None:
        """``(X - 1)^2 (X + 1)`` keeps its simple factor."""
        cert = algebra_certificate(quotient("(X - 1)^2*(X + 1)"))
        assert cert.verdict is Verdict.CONTAINS_FIELD_SUMMAND
        assert cert.parts[0].verdict is Verdict.NOT_SEMISIMPLE
        assert verify_certificate(cert)

    def test_local(self, quotient) -> None:
        """``X^2`` has nothing to split off."""
        assert algebra_certificate(quotient("X^2")).verdict is Verdict.NOT_SEMISIMPLE


class TestKunneth:
    """Product verdicts checked on the tensor itself."""

    def test_semisimple_factors(self, quotient) -> None:
        """Two reduced factors give a reduced product."""
        cert = kunneth_check(quotient("X^2 - 1"), quotient("X^2 - 2"))
        assert cert.verdict is Verdict.SEMISIMPLE
        assert "INCONSISTENT" not in cert.note
        assert verify_certificate(cert)

    def test_nilpotent_transported(self, quotient) -> None:
        """A nilpotent factor makes the product non-reduced."""
        cert = kunneth_check(quotient("X^2 - 1"), quotient("X^2"))
        assert cert.verdict is Verdict.NOT_SEMISIMPLE
        assert "vanishes at power 2: True" in cert.note
        assert "INCONSISTENT" not in cert.note

    def test_field_summand_transported(self, quotient) -> None:
        """The idempotent of a field summand survives the product."""
        cert = kunneth_check(quotient("(X - 1)^2*(X + 1)"), quotient("X^2 - 1"))
        assert cert.verdict is Verdict.CONTAINS_FIELD_SUMMAND
        assert "idempotent of the left field summand" in cert.note
        assert "INCONSISTENT" not in cert.note

    def test_size_bound(self, quotient) -> None:
        """The product dimension is capped by the settings."""
        with patch("products.kunneth.settings") as mock_settings:
            mock_settings.trace_form_max_dim = 3
            with pytest.raises(SizeError, match="dimension 4"):
                kunneth_check(quotient("X^2 - 1"), quotient("X^2"))

    def test_odd_homology(self, quotient) -> None:
        """Factors with odd homology are refused."""
        with pytest.raises(UsageError, match="vanishing odd homology"):
            kunneth_check(quotient("X^2 - 1"), quotient("X^2", odd_vanishing=False))
