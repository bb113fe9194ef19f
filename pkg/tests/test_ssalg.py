"""Tests for semi-simplicity certificates of univariate quotients and small algebras."""

import random
from dataclasses import replace
from unittest.mock import patch

import pytest

from arith import DomainError, MPoly, ParamSystem, UniPoly, UsageError, parse_mpoly
from ssalg import (
    FDAlgebra,
    MembershipError,
    MembershipWitness,
    SizeError,
    Verdict,
    WitnessKind,
    check_substitution_homomorphism,
    crt_idempotents,
    field_summand_certificate,
    gram_matrix,
    is_semisimple_univariate,
    nilpotent_witness,
    nonvanishing_test,
    projective_space_table,
    radical_certificate,
    seidenberg_radical_check,
    strip_nonzero,
    toy_monotone_tables,
    trace_form_semisimple,
    univariate_quotient,
    verify_certificate,
)


def _constants(matrix) -> list[list]:
    return [[c.constant_value() for c in row] for row in matrix]


class TestUnivariateSemisimple:
    """Discriminant verdicts for ``K[X]/(f)``."""

    def test_parametric_squarefree(self, uni_x) -> None:
        """``X^2 - x`` is semisimple; the witness holds for every exponent."""
        cert = is_semisimple_univariate(uni_x("X^2 - x"))
        assert cert.verdict is Verdict.SEMISIMPLE
        assert cert.resultant.nonvanishing.kind is WitnessKind.UNIT
        assert cert.resultant.content == MPoly.variable(cert.resultant.content.system, "x")
        assert verify_certificate(cert)

    def test_double_root(self, uni) -> None:
        """``X^2`` has the nilpotent ``X``."""
        cert = is_semisimple_univariate(uni("X^2"))
        assert cert.verdict is Verdict.NOT_SEMISIMPLE
        assert cert.nilpotent.element == uni("X")
        assert cert.nilpotent.power == 2
        assert verify_certificate(cert)

    def test_nilpotent_of_mixed(self, uni) -> None:
        """The radical is the product of the distinct factors."""
        witness = nilpotent_witness(uni("(X - 1)^3*(X + 2)"))
        assert witness.element == uni("(X - 1)*(X + 2)")
        assert witness.power == 3

    def test_squarefree_has_no_nilpotent(self, uni) -> None:
        """No witness for a squarefree modulus."""
        assert nilpotent_witness(uni("X^2 - 1")) is None

    def test_constant_rejected(self, uni) -> None:
        """A constant modulus is not a quotient of interest."""
        with pytest.raises(UsageError, match="degree at least 1"):
            is_semisimple_univariate(uni("3"))

    def test_tampered_verdict(self, uni) -> None:
        """A verdict without its witness fails re-verification."""
        cert = is_semisimple_univariate(uni("X^2 - 1"))
        assert not verify_certificate(replace(cert, verdict=Verdict.NOT_SEMISIMPLE))

    def test_tampered_nilpotent(self, uni) -> None:
        """A wrong nilpotency index fails re-verification."""
        cert = is_semisimple_univariate(uni("X^2"))
        broken = replace(cert, nilpotent=replace(cert.nilpotent, power=1))
        assert not verify_certificate(broken)


class TestFieldSummand:
    """Splitting off the multiplicity-one part."""

    def test_mixed(self, uni) -> None:
        """``(X - 1)^2 (X + 2)`` keeps the field ``K[X]/(X + 2)``."""
        cert = field_summand_certificate(uni("(X - 1)^2*(X + 2)"))
        assert cert.verdict is Verdict.CONTAINS_FIELD_SUMMAND
        assert cert.summand.part == uni("X + 2")
        assert cert.summand.rest == uni("(X - 1)^2")
        assert cert.idempotents is not None
        assert verify_certificate(cert)

    def test_squarefree(self, uni) -> None:
        """A squarefree modulus is its own simple part."""
        cert = field_summand_certificate(uni("X^2 - 1"))
        assert cert.verdict is Verdict.CONTAINS_FIELD_SUMMAND
        assert cert.idempotents is None
        assert "squarefree" in cert.note
        assert verify_certificate(cert)

    def test_no_simple_factor(self, uni) -> None:
        """``X^2`` has no multiplicity-one factor."""
        cert = field_summand_certificate(uni("X^2"))
        assert cert.verdict is Verdict.INCONCLUSIVE

    def test_crt_idempotents(self, uni) -> None:
        """Idempotents for coprime factors."""
        witness = crt_idempotents(uni("X - 1"), uni("X + 1"))
        f = witness.modulus
        assert (witness.e1 + witness.e2 - 1).rem(f).is_zero()
        assert (witness.e1 * witness.e2).rem(f).is_zero()
        assert (witness.e1 - 1).rem(uni("X - 1")).is_zero()

    def test_crt_needs_coprime(self, uni) -> None:
        """A common factor has no idempotent split."""
        with pytest.raises(DomainError, match="share the factor"):
            crt_idempotents(uni("X^2 - 1"), uni("X - 1"))


class TestNonvanishing:
    """Specialization schedule and declared nonzero factors."""

    def test_unit_point(self, with_x: ParamSystem) -> None:
        """A value at the all-ones point is a unit witness."""
        witness = nonvanishing_test(parse_mpoly("x + 1", with_x))
        assert witness.kind is WitnessKind.UNIT
        assert witness.value == 2

    def test_generic_point(self, with_x: ParamSystem) -> None:
        """Vanishing at one moves on to the prime points."""
        witness = nonvanishing_test(parse_mpoly("x - 1", with_x))
        assert witness.kind is WitnessKind.GENERIC
        assert witness.value != 0

    def test_zero(self, with_x: ParamSystem) -> None:
        """The zero polynomial has no witness."""
        assert nonvanishing_test(MPoly.zero(with_x)) is None

    def test_strip(self, with_x: ParamSystem) -> None:
        """Content and declared factors are divided out."""
        poly = parse_mpoly("x^2*(x - 1)^2*(x + 1)", with_x)
        factor = parse_mpoly("x - 1", with_x)
        content, stripped, core = strip_nonzero(poly, [factor])
        assert content == parse_mpoly("x^2", with_x)
        assert stripped == ((factor, 2),)
        assert core == parse_mpoly("x + 1", with_x)


class TestTraceForm:
    """Gram matrices of the trace form."""

    def test_nilpotent_gram(self, uni) -> None:
        """``K[X]/(X^2)`` has a degenerate trace form."""
        alg = univariate_quotient(uni("X^2"))
        assert _constants(gram_matrix(alg)) == [[2, 0], [0, 0]]
        cert = trace_form_semisimple(alg)
        assert cert.verdict is Verdict.NOT_SEMISIMPLE
        assert verify_certificate(cert)

    def test_split_gram(self, uni) -> None:
        """``K[X]/(X^2 - 1)`` is a product of two copies of ``K``."""
        alg = univariate_quotient(uni("X^2 - 1"))
        assert _constants(gram_matrix(alg)) == [[2, 0], [0, 2]]
        cert = trace_form_semisimple(alg)
        assert cert.verdict is Verdict.SEMISIMPLE
        assert verify_certificate(cert)

    def test_size_bound(self, uni) -> None:
        """Dense determinants are refused past the configured dimension."""
        alg = univariate_quotient(uni("X^3 - 1"))
        with patch("ssalg.trace_form.settings") as mock_settings:
            mock_settings.trace_form_max_dim = 2
            with pytest.raises(SizeError, match="dimension 3"):
                trace_form_semisimple(alg)

    def test_agrees_with_discriminant(self, plain: ParamSystem) -> None:
        """Trace form and discriminant give the same verdict up to dimension 8."""
        rng = random.Random(8)
        for _ in range(40):
            f = UniPoly.one(plain, "X")
            for _ in range(rng.randint(1, 3)):
                f = f * (UniPoly.x(plain, "X") - rng.randint(-3, 3)) ** rng.randint(1, 2)
            by_discriminant = is_semisimple_univariate(f).verdict
            by_trace = trace_form_semisimple(univariate_quotient(f)).verdict
            assert by_discriminant is by_trace
            assert by_trace in (Verdict.SEMISIMPLE, Verdict.NOT_SEMISIMPLE)


class TestFDAlgebra:
    """Structure tables and their JSON form."""

    def test_table_json(self) -> None:
        """A table with ``e^2 = 1``."""
        alg = FDAlgebra.from_json(
            {
                "basis": ["1", "e"],
                "table": [[["1", "0"], ["0", "1"]], [["0", "1"], ["1", "0"]]],
                "unity": ["1", "0"],
            }
        )
        assert alg.dim == 2
        assert trace_form_semisimple(alg).verdict is Verdict.SEMISIMPLE

    def test_quotient_json(self) -> None:
        """``{"variable", "quotient"}`` builds ``K[X]/(f)``."""
        alg = FDAlgebra.from_json({"params": ["x"], "variable": "X", "quotient": "X^2 - x"})
        assert alg.labels == ("1", "X")
        again = FDAlgebra.from_json(alg.to_json())
        assert again.same_constants(alg)

    def test_not_commutative(self) -> None:
        """Tables must be symmetric."""
        with pytest.raises(UsageError, match="Not commutative"):
            FDAlgebra.from_json(
                {
                    "basis": ["1", "e"],
                    "table": [[["1", "0"], ["0", "1"]], [["0", "0"], ["1", "0"]]],
                    "unity": ["1", "0"],
                }
            )

    def test_missing_key(self) -> None:
        """Every table needs its unity."""
        with pytest.raises(UsageError, match="unity"):
            FDAlgebra.from_json({"basis": ["1"], "table": [[["1"]]]})


class TestSubstitution:
    """Rewriting ``u`` as ``q s^kappa`` in the product table."""

    def test_toy_tables(self) -> None:
        """The rewriting maps the ``u`` table onto the ``q, s`` table."""
        star_u, star_qs, target = toy_monotone_tables()
        assert target == {"q": 1, "s": 1}
        assert check_substitution_homomorphism(star_u, star_qs, "u", target)

    def test_corrupted_table(self) -> None:
        """Dropping the ``s`` power breaks the match."""
        star_u, _, target = toy_monotone_tables()
        system = star_u.system
        wrong = projective_space_table(system, 1, MPoly.monomial(system, {"q": -2}))
        assert not check_substitution_homomorphism(star_u, wrong, "u", target)

    def test_dimension_mismatch(self) -> None:
        """Tables of different sizes cannot match."""
        star_u, _, target = toy_monotone_tables()
        system = star_u.system
        bigger = projective_space_table(system, 2, MPoly.monomial(system, {"q": -3}))
        with pytest.raises(UsageError, match="cannot match"):
            check_substitution_homomorphism(star_u, bigger, "u", target)


class TestRadicalIdeal:
    """Squarefree univariate members of two-generator ideals."""

    @pytest.fixture
    def two(self) -> ParamSystem:
        return ParamSystem.of(generators=("A", "B"))

    def test_radical(self, two: ParamSystem) -> None:
        """``(A^2 - 1, B^2 - A)`` has squarefree members in both generators."""
        ideal = (parse_mpoly("A^2 - 1", two), parse_mpoly("B^2 - A", two))
        cert = radical_certificate(ideal)
        assert cert.verdict is Verdict.RADICAL_IDEAL
        assert len(cert.membership) == 2
        assert verify_certificate(cert)

    def test_nilpotent_member(self, two: ParamSystem) -> None:
        """A repeated root in a member leaves the question open."""
        ideal = (parse_mpoly("A^2", two), parse_mpoly("B - 1", two))
        cert = radical_certificate(ideal)
        assert cert.verdict is Verdict.INCONCLUSIVE
        assert cert.parts[0].verdict is Verdict.NOT_SEMISIMPLE

    @pytest.mark.parametrize(
        ("target", "generators", "multipliers", "message"),
        [
            ("A^2 - 1", ("A^2 - 1", "B^2 - 1"), ("1", "0"), "uses other generators"),
            ("A^2 - 1", ("A^2 - 1", "B^2 - A"), ("0", "1"), "not the stated combination"),
            ("B^2 - A", ("A^2 - 1", "B^2 - A"), ("0", "1"), "not univariate"),
            ("A - A^-1", ("A^2 - 1", "B^2 - A"), ("A^-1", "0"), "not univariate"),
        ],
    )
    def test_bad_membership(
        self,
        two: ParamSystem,
        target: str,
        generators: tuple[str, str],
        multipliers: tuple[str, str],
        message: str,
    ) -> None:
        """A witness that does not prove membership in ``K[A]`` is refused."""
        ideal = (parse_mpoly("A^2 - 1", two), parse_mpoly("B^2 - A", two))
        good_b = MembershipWitness(
            parse_mpoly("B^4 - 1", two), ideal, (MPoly.one(two), parse_mpoly("B^2 + A", two))
        )
        bad_a = MembershipWitness(
            parse_mpoly(target, two),
            tuple(parse_mpoly(g, two) for g in generators),
            tuple(parse_mpoly(m, two) for m in multipliers),
        )
        assert good_b.holds()
        with pytest.raises(MembershipError, match=message):
            seidenberg_radical_check(ideal, bad_a, good_b)
