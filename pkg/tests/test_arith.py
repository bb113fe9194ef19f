"""Tests for exact arithmetic: rationals, linear forms, Laurent polynomials, univariate algorithms."""

import random
from fractions import Fraction

import pytest

from arith import (
    DomainError,
    LinearForm,
    MPoly,
    ParamSystem,
    ParseError,
    UniPoly,
    UsageError,
    bezout,
    format_rational,
    gcd_uni,
    parse_linear_form,
    parse_mpoly,
    parse_rational,
    parse_relation,
    resultant_uni,
    resultant_with_cofactors,
    squarefree_decomposition,
    sylvester_determinant,
    sylvester_matrix,
)


class TestRationals:
    """Exact rational parsing and canonical text."""

    @pytest.mark.parametrize(
        ("text", "expected"),
        [("2/3", Fraction(2, 3)), ("-4", Fraction(-4)), (" 6/8 ", Fraction(3, 4)), (5, Fraction(5))],
    )
    def test_parse(self, text, expected) -> None:
        """Integers and p/q strings parse exactly."""
        assert parse_rational(text) == expected

    @pytest.mark.parametrize("text", ["0.5", "1e3", "", "two", "1/0"])
    def test_parse_rejects(self, text) -> None:
        """Decimals, empty strings and zero denominators are rejected."""
        with pytest.raises(UsageError):
            parse_rational(text)

    def test_decimal_message(self) -> None:
        """The error for a decimal names the accepted forms."""
        with pytest.raises(UsageError, match="p or p/q"):
            parse_rational("0.25")

    def test_format(self) -> None:
        """Canonical text is p or p/q."""
        assert format_rational(Fraction(-3, 4)) == "-3/4"
        assert format_rational(Fraction(6, 3)) == "2"


class TestLinearForm:
    """Symbolic exponents."""

    def test_text(self) -> None:
        """Constant first, then symbols in insertion order."""
        assert str(LinearForm.of(1, eps=-1, delta=-1)) == "1 - eps - delta"
        assert str(LinearForm()) == "0"

    def test_arithmetic_and_evaluate(self) -> None:
        """Sums cancel symbols and evaluation is exact."""
        form = LinearForm.of(1, eps=-1) + LinearForm.symbol("eps") * 2
        assert form == LinearForm.of(1, eps=1)
        assert form.evaluate({"eps": Fraction(2, 3)}) == Fraction(5, 3)

    def test_evaluate_missing_symbol(self) -> None:
        """Every symbol needs a value."""
        with pytest.raises(UsageError, match="eps"):
            LinearForm.symbol("eps").evaluate({})

    def test_substitute(self) -> None:
        """A symbol is replaced by another form."""
        theta = LinearForm.of(Fraction(-1, 3), alpha=1)
        assert LinearForm.of(0, theta=2).substitute("theta", theta) == LinearForm.of(
            Fraction(-2, 3), alpha=2
        )

    def test_parse(self) -> None:
        """Text forms parse to the same linear form."""
        assert parse_linear_form("1 - eps") == LinearForm.of(1, eps=-1)
        assert parse_linear_form("2/3") == LinearForm.constant("2/3")

    def test_parse_rejects_nonlinear(self) -> None:
        """Products of symbols are not linear."""
        with pytest.raises(ParseError, match="not linear"):
            parse_linear_form("eps*delta")


class TestMPoly:
    """Laurent polynomials over a parameter system."""

    def test_canonical_text(self, with_x: ParamSystem) -> None:
        """Terms are grlex-descending; within a term parameters come before generators."""
        X, x = MPoly.variable(with_x, "X"), MPoly.variable(with_x, "x")
        assert (X**2 - x).to_text() == "X^2 - x"
        assert (3 * X * x - 1).to_text() == "3 * x*X - 1"

    def test_laurent_monomials(self, with_x: ParamSystem) -> None:
        """Parameters are units: negative powers of single terms exist."""
        x = MPoly.variable(with_x, "x")
        assert x**-2 * x**2 == 1
        assert (x**-1).is_term

    def test_negative_power_of_sum(self, with_x: ParamSystem) -> None:
        """Only single terms can be inverted."""
        x = MPoly.variable(with_x, "x")
        with pytest.raises(DomainError, match="Negative power"):
            (x + 1) ** -1

    def test_exquo(self, with_x: ParamSystem) -> None:
        """Exact division succeeds or raises."""
        X, x = MPoly.variable(with_x, "X"), MPoly.variable(with_x, "x")
        assert (X**2 - x**2).exquo(X - x) == X + x
        assert (X - x).divides(X**2 - x**2)
        with pytest.raises(DomainError, match="does not divide"):
            (X**2 + 1).exquo(X + x)

    def test_evaluate(self, with_x: ParamSystem) -> None:
        """Evaluation is exact and refuses poles."""
        X, x = MPoly.variable(with_x, "X"), MPoly.variable(with_x, "x")
        assert (X**2 - x).evaluate({"X": 2, "x": 3}) == 1
        assert (x**-1).evaluate({"x": Fraction(1, 2)}) == 2
        with pytest.raises(DomainError, match="Zero assigned"):
            (x**-1).evaluate({"x": 0})
        with pytest.raises(UsageError, match="No value"):
            (X + x).evaluate({"x": 1})

    def test_systems_do_not_mix(self, with_x: ParamSystem, plain: ParamSystem) -> None:
        """Operands over different systems are rejected."""
        with pytest.raises(UsageError, match="different parameter systems"):
            MPoly.variable(with_x, "X") + MPoly.variable(plain, "X")

    def test_substitute(self, with_x: ParamSystem) -> None:
        """Substituting a generator by a Laurent polynomial."""
        X, x = MPoly.variable(with_x, "X"), MPoly.variable(with_x, "x")
        assert (X**2 + X).substitute("X", x**-1) == x**-2 + x**-1

    def test_primitive_part(self, with_x: ParamSystem) -> None:
        """The monomial content is divided out."""
        X, x = MPoly.variable(with_x, "X"), MPoly.variable(with_x, "x")
        assert (x**2 * X**3 + x**3 * X).primitive_part() == X**2 + x


class TestRelations:
    """Declared monomial relations among parameters."""

    def test_equality_relation(self, hexagon_system: ParamSystem) -> None:
        """``y=z`` eliminates ``z``."""
        system = hexagon_system.with_relations([parse_relation("y=z", hexagon_system)])
        assert system.active_params == ("s", "x", "y")
        assert not (MPoly.variable(system, "z") - MPoly.variable(system, "y"))

    def test_product_relation(self, hexagon_system: ParamSystem) -> None:
        """``xyz=1`` makes ``z`` the inverse of ``xy``."""
        system = hexagon_system.with_relations([parse_relation("xyz=1", hexagon_system)])
        x, y, z = (MPoly.variable(system, n) for n in ("x", "y", "z"))
        assert x * y * z == 1

    @pytest.mark.parametrize(("text", "message"), [("x=x", "trivial"), ("xy", "lhs=rhs")])
    def test_bad_relations(self, hexagon_system: ParamSystem, text: str, message: str) -> None:
        """Malformed relations are rejected with a reason."""
        with pytest.raises(UsageError, match=message):
            parse_relation(text, hexagon_system)


class TestParsing:
    """Polynomial text input."""

    def test_round_trip_text(self, with_x: ParamSystem) -> None:
        """Canonical text parses back to the same polynomial."""
        poly = parse_mpoly("x^-1*X^3 - 2*X + 1/3", with_x)
        assert parse_mpoly(poly.to_text(), with_x) == poly

    def test_syntax_error_has_position(self, with_x: ParamSystem) -> None:
        """Syntax errors carry a line and column."""
        with pytest.raises(ParseError, match=r"line \d+, column \d+"):
            parse_mpoly("X + * 2", with_x)

    def test_unknown_variable(self, with_x: ParamSystem) -> None:
        """Only declared names may appear."""
        with pytest.raises(ParseError, match="Unknown variables w"):
            parse_mpoly("X + w", with_x)

    def test_non_monomial_denominator(self, with_x: ParamSystem) -> None:
        """Laurent polynomials only have monomial denominators."""
        with pytest.raises(ParseError, match="non-monomial"):
            parse_mpoly("1/(x + 1)", with_x)


class TestUnivariate:
    """Resultants, gcds, Bezout identities and squarefree decomposition."""

    def test_discriminant_resultant(self, uni_x, var_x: MPoly) -> None:
        """``Res(X^2 - x, 2X) = -4x``."""
        f = uni_x("X^2 - x")
        assert resultant_uni(f, f.derivative()) == -4 * var_x

    def test_sylvester_matrix_layout(self, uni) -> None:
        """Rows of ``f`` come first, highest degree on the left."""
        f, g = uni("X^2 + 2*X + 3"), uni("5*X + 7")
        rows = [[c.constant_value() for c in row] for row in sylvester_matrix(f, g)]
        assert rows == [[1, 2, 3], [5, 7, 0], [0, 5, 7]]

    def test_determinant_matches_resultant(self, uni_x) -> None:
        """The plain determinant and the resultant routine agree."""
        f, g = uni_x("x*X^3 - X + 2"), uni_x("X^2 - x^2")
        assert sylvester_determinant(f, g) == resultant_uni(f, g)

    def test_cofactors(self, uni_x) -> None:
        """``u f + v g = Res(f, g)`` exactly."""
        f, g = uni_x("X^3 - x"), uni_x("X^2 + X + x")
        value, u, v = resultant_with_cofactors(f, g)
        assert u * f + v * g == UniPoly.one(f.system, "X") * value
        assert u.degree() < g.degree() and v.degree() < f.degree()

    def test_gcd(self, uni) -> None:
        """Monic gcd over the field."""
        f = uni("2*(X - 1)^2*(X + 2)")
        g = uni("(X - 1)*(X + 3)")
        assert gcd_uni(f, g) == uni("X - 1")

    def test_gcd_of_zeros(self, uni) -> None:
        """Two zero polynomials have no gcd."""
        zero = uni("X") - uni("X")
        with pytest.raises(UsageError, match="undefined"):
            gcd_uni(zero, zero)

    def test_bezout(self, uni_x) -> None:
        """Bezout cofactors reach the monic gcd."""
        f, g = uni_x("X^2 - x"), uni_x("X + 1")
        u, v, h = bezout(f, g)
        assert h == 1
        assert u * f + v * g == h

    def test_squarefree(self, uni_x) -> None:
        """Multiplicities are separated and the product is recovered."""
        f = uni_x("5*(X - 1)^3*(X + x)")
        decomposition = squarefree_decomposition(f)
        assert decomposition.unit == 5
        assert decomposition.part(3) == uni_x("X - 1")
        assert decomposition.part(1) == uni_x("X + x")
        assert decomposition.part(2) is None
        assert not decomposition.is_squarefree
        assert decomposition.radical() == uni_x("(X - 1)*(X + x)")
        assert decomposition.expand() == f

    def test_resultant_of_zero(self, uni) -> None:
        """The resultant with the zero polynomial is undefined."""
        zero = uni("X") - uni("X")
        with pytest.raises(UsageError, match="zero polynomial"):
            resultant_uni(uni("X"), zero)


def _random_poly(rng: random.Random, system: ParamSystem, low: int, high: int) -> UniPoly:
    while True:
        degree = rng.randint(low, high)
        coeffs = [rng.randint(-3, 3) for _ in range(degree)] + [rng.choice([-2, -1, 1, 2])]
        f = UniPoly.from_coefficients(system, "X", coeffs)
        if f.degree() >= low:
            return f


def _random_factored(rng: random.Random, system: ParamSystem) -> UniPoly:
    f = UniPoly.one(system, "X") * rng.choice([-3, 1, 2])
    for _ in range(rng.randint(1, 3)):
        root = rng.randint(-4, 4)
        f = f * (UniPoly.x(system, "X") - root) ** rng.randint(1, 3)
    return f


class TestRandomizedUnivariate:
    """Seeded property checks over random integer polynomials."""

    def test_gcd_and_resultant_agree(self, plain: ParamSystem) -> None:
        """The resultant vanishes exactly when the gcd is nontrivial."""
        rng = random.Random(20240611)
        for _ in range(1000):
            f = _random_poly(rng, plain, 1, 3)
            g = _random_poly(rng, plain, 1, 3)
            if rng.random() < 0.3:
                common = _random_poly(rng, plain, 1, 1)
                f, g = f * common, g * common
            h = gcd_uni(f, g)
            assert h.divides(f) and h.divides(g)
            assert (h.degree() > 0) == (not resultant_uni(f, g))

    def test_resultant_matches_determinant(self, plain: ParamSystem) -> None:
        """The resultant routine agrees with the Sylvester determinant."""
        rng = random.Random(7)
        for _ in range(200):
            f = _random_poly(rng, plain, 1, 4)
            g = _random_poly(rng, plain, 1, 4)
            assert resultant_uni(f, g) == sylvester_determinant(f, g)

    def test_squarefree_reconstruction(self, plain: ParamSystem) -> None:
        """Decompositions multiply back to the input with coprime squarefree parts."""
        rng = random.Random(1000)
        for _ in range(1000):
            f = _random_factored(rng, plain)
            decomposition = squarefree_decomposition(f)
            assert decomposition.expand() == f
            for a, _ in decomposition.factors:
                assert gcd_uni(a, a.derivative()).degree() == 0
