"""Tests for the one-point blow-up algebra ``K[A]/(A^2 (A^(n-1) - z))``."""

from unittest.mock import patch

import pytest

from blowup import a_is_zero_divisor, analyze, build, summand_checks, verify_E_products
from ssalg import Verdict, verify_certificate
from toric import ParameterError


class TestBuild:
    """Construction and its bounds."""

    def test_quotient(self) -> None:
        """``n = 3`` gives ``A^4 - z A^2``."""
        alg = build(3)
        assert alg.quotient == alg.a**4 - alg.z * alg.a**2
        assert alg.algebra().dim == 4

    def test_b_is_nilpotent(self) -> None:
        """``B = Az - A^n`` is nonzero with ``B^2 = 0``."""
        alg = build(4)
        assert not alg.is_zero(alg.b)
        assert alg.is_zero(alg.b * alg.b)
        assert alg.is_zero(alg.a * alg.b)

    def test_too_small(self) -> None:
        """Surfaces start at ``n = 2``."""
        with pytest.raises(ParameterError, match="n >= 2"):
            build(1)

    def test_configured_bound(self) -> None:
        """``n`` is capped by the settings."""
        with patch("blowup.algebra.settings") as mock_settings:
            mock_settings.blowup_max_n = 4
            with pytest.raises(ParameterError, match="exceeds the configured bound 4"):
                build(5)


class TestAnalysis:
    """A field summand without semi-simplicity."""

    @pytest.mark.parametrize("n", range(2, 9))
    def test_verdicts(self, n: int) -> None:
        """Not semisimple, with a nilpotent part and a field-summand part."""
        alg = build(n)
        cert = analyze(alg)
        assert cert.verdict is Verdict.NOT_SEMISIMPLE
        nilpotent, summand = cert.parts
        assert nilpotent.verdict is Verdict.NOT_SEMISIMPLE
        assert nilpotent.nilpotent.power == 2
        assert summand.verdict is Verdict.CONTAINS_FIELD_SUMMAND
        assert summand.summand.rest == alg.a**2
        assert verify_certificate(cert)

    @pytest.mark.parametrize("n", [2, 3, 5])
    def test_summand_identities(self, n: int) -> None:
        """The idempotent, ``B`` and the zero divisor ``A`` behave as claimed."""
        checks = summand_checks(build(n))
        assert checks.idempotent_divisible_by_a2
        assert checks.b_kills_idempotent
        assert checks.b_in_complement
        assert checks.b_squared_zero
        assert checks.all()

    def test_a_zero_divisor(self) -> None:
        """``A`` kills ``A (A^(n-1) - z)``."""
        assert a_is_zero_divisor(build(3))

    @pytest.mark.parametrize("n", [2, 3, 6])
    def test_exceptional_products(self, n: int) -> None:
        """Powers of ``A`` multiply as on the exceptional divisor."""
        assert verify_E_products(build(n))
