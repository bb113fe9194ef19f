"""Tests for primitive sets, quantum homology presentations and their reductions."""

from fractions import Fraction

import pytest

from arith import LinearForm, MPoly, UsageError, parse_mpoly
from batyrev import (
    Normalization,
    QHPresentation,
    ReducedKind,
    ReducedPresentation,
    UnsupportedModelError,
    cp2_collection,
    presentation,
    primitive_sets,
    reduce,
    resultant_comparison,
    verify_elimination,
)
from toric import MomentPolytope

PENTAGON_QUOTIENT = (
    "s*x^-1*X^5 + (s^2*x^-2*y^-1 - 1)*X^4 - 2*s*x^-2*X^3 - 2*s^2*x^-3*y^-1*X^2"
    " + s*x^-3*X + s^2*x^-4*y^-1"
)


class TestPrimitiveSets:
    """Non-adjacent facet pairs and the cones of their normal sums."""

    def test_pentagon_pairs(self, pentagon: MomentPolytope) -> None:
        """Five pairs, each sum a ray or zero."""
        sets = primitive_sets(pentagon)
        assert [ps.indices for ps in sets] == [(1, 3), (1, 4), (2, 4), (2, 5), (3, 5)]
        by_pair = {ps.indices: ps for ps in sets}
        assert by_pair[(1, 3)].w == (-1, -1)
        assert by_pair[(1, 3)].as_dict() == {2: 1}
        assert by_pair[(1, 4)].cone == ()

    def test_triangle_collection(self, triangle: MomentPolytope) -> None:
        """The triangle has the single collection of all three facets."""
        assert cp2_collection(triangle).indices == (1, 2, 3)
        with pytest.raises(UnsupportedModelError, match="no primitive pairs"):
            primitive_sets(triangle)

    def test_collection_needs_triangle(self, square: MomentPolytope) -> None:
        """Only the triangle has a three-element collection."""
        with pytest.raises(UnsupportedModelError):
            cp2_collection(square)


class TestPresentation:
    """Additive and multiplicative relations."""

    def test_pentagon_additive(self, pentagon_presentation: QHPresentation) -> None:
        """One row per coordinate of the normals."""
        assert pentagon_presentation.additive_texts() == [
            "-u2 - u3 + u5 = 0",
            "-u1 - u2 + u4 = 0",
        ]

    def test_pentagon_relation_13(self, pentagon_presentation: QHPresentation) -> None:
        """``u1*u3 = s^(1 - eps - delta) q^-1 u2``."""
        rel = pentagon_presentation.relation(1, 3)
        assert rel.s_exponent == LinearForm.of(1, eps=-1, delta=-1)
        assert rel.q_exponent == -1
        assert rel.monomial == ((2, 1),)
        assert rel.to_text() == "u1*u3 = s^(1 - eps - delta) * q^-1 * u2"
        lhs, rhs = rel.degrees()
        assert lhs == rhs

    def test_pentagon_normalized(self, pentagon_presentation: QHPresentation) -> None:
        """Normalized generators satisfy monomial identities."""
        assert pentagon_presentation.normalized_texts() == [
            "v1*v3 = v2",
            "v1*v4 = 1",
            "v2*v4 = v3",
            "v2*v5 = v1",
            "v3*v5 = 1",
        ]

    def test_hexagon_normalized(self, hexagon_presentation: QHPresentation) -> None:
        """Nine primitive pairs on the hexagon."""
        assert hexagon_presentation.normalized_texts() == [
            "v1*v3 = v2",
            "v1*v4 = 1",
            "v1*v5 = v6",
            "v2*v4 = v3",
            "v2*v5 = 1",
            "v2*v6 = v1",
            "v3*v5 = v4",
            "v3*v6 = 1",
            "v4*v6 = v5",
        ]

    def test_missing_relation(self, pentagon_presentation: QHPresentation) -> None:
        """Adjacent pairs have no relation."""
        with pytest.raises(KeyError):
            pentagon_presentation.relation(1, 2)

    def test_json_round_trip(self, hexagon_presentation: QHPresentation) -> None:
        """The JSON form restores the same relations."""
        again = QHPresentation.from_json(hexagon_presentation.to_json())
        assert again.normals == hexagon_presentation.normals
        assert again.supports == hexagon_presentation.supports
        assert again.relation_texts() == hexagon_presentation.relation_texts()
        assert again.params == hexagon_presentation.params

    def test_triangle_relation(self, triangle: MomentPolytope) -> None:
        """``u1*u2*u3 = s^-scale q^-3 [M]``."""
        (rel,) = presentation(triangle).relations
        assert rel.q_exponent == -3
        assert rel.s_exponent == LinearForm.of(0, scale=-1)


class TestReduction:
    """Reduction to polynomial quotients."""

    def test_pentagon_univariate(
        self, pentagon_reduced: ReducedPresentation, pentagon_presentation: QHPresentation
    ) -> None:
        """The pentagon has no monotone center and reduces to a quintic in X."""
        assert pentagon_reduced.normalization is Normalization.FACET
        assert pentagon_reduced.kind is ReducedKind.UNIVARIATE
        assert pentagon_reduced.free_pair == (1, 3)
        assert pentagon_reduced.survivors == ("X",)
        target = parse_mpoly(PENTAGON_QUOTIENT, pentagon_reduced.system)
        assert pentagon_reduced.generators[0] == target
        assert verify_elimination(pentagon_reduced, pentagon_presentation)

    def test_pentagon_specialization(self, pentagon_reduced: ReducedPresentation) -> None:
        """At ``s = x = y = 1`` the quotient is ``X^5 - 2X^3 - 2X^2 + X + 1``."""
        special = pentagon_reduced.quotient.specialize({"s": 1, "x": 1, "y": 1}).monic()
        assert [c.constant_value() for c in special.coefficients()] == [1, 1, -2, -2, 0, 1]

    def test_hexagon_bivariate(
        self, hexagon_reduced: ReducedPresentation, hexagon_presentation: QHPresentation
    ) -> None:
        """The hexagon is monotone and keeps a two-generator ideal."""
        system = hexagon_reduced.system
        assert hexagon_reduced.normalization is Normalization.MONOTONE
        assert hexagon_reduced.kind is ReducedKind.BIVARIATE
        assert hexagon_reduced.level == Fraction(1, 3)
        assert hexagon_reduced.generators == (
            parse_mpoly("A^2*B^2 + x*A^2*B - B - z", system),
            parse_mpoly("A^2*B^2 + y*A*B^2 - A - z", system),
        )
        assert verify_elimination(hexagon_reduced, hexagon_presentation)
        with pytest.raises(UsageError, match="no single quotient"):
            hexagon_reduced.quotient

    def test_triangle_quotient(self, triangle: MomentPolytope) -> None:
        """``X^3 = s^-scale`` with the scale as variable ``x``."""
        reduced = reduce(presentation(triangle))
        assert reduced.quotient.to_text() == "X^3 - x^-1"

    def test_monotone_requires_center(self, pentagon_presentation: QHPresentation) -> None:
        """Forcing the monotone form fails without a center."""
        with pytest.raises(UsageError, match="monotone center"):
            reduce(pentagon_presentation, Normalization.MONOTONE)

    def test_declared_relation(self, hexagon_presentation: QHPresentation) -> None:
        """``xyz=1`` eliminates ``z`` from the ideal."""
        reduced = reduce(hexagon_presentation, relations=["xyz=1"])
        assert reduced.system.active_params == ("s", "x", "y")
        x, y = (MPoly.variable(reduced.system, n) for n in ("x", "y"))
        assert parse_mpoly("z", reduced.system) == (x * y) ** -1
        assert reduced.relations == ("xyz=1",)

    def test_resultant_comparison(self, pentagon_reduced: ReducedPresentation) -> None:
        """Eliminating Y by a resultant gives the quotient up to a unit."""
        comparison = resultant_comparison(pentagon_reduced)
        assert comparison.exact
        assert comparison.x_power == 0

    def test_resultant_comparison_needs_elimination(
        self, hexagon_reduced: ReducedPresentation
    ) -> None:
        """A bivariate ideal has nothing to compare."""
        with pytest.raises(UsageError):
            resultant_comparison(hexagon_reduced)

    def test_json(self, pentagon_reduced: ReducedPresentation) -> None:
        """The reduced form reports its substitutions."""
        data = pentagon_reduced.to_json()
        assert data["kind"] == "univariate"
        assert data["substitutions"]["qu1"] == "X"
        assert data["substitutions"]["qu3"] == "Y"
        assert list(data["eliminated"]) == ["Y"]
