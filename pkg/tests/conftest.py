"""Pytest fixtures: standard polygons at sample parameters, parameter systems, reductions."""

import pytest

from arith import MPoly, ParamSystem, UniPoly, parse_unipoly
from batyrev import QHPresentation, ReducedPresentation, presentation, reduce
from toric import MomentPolytope, standard_model

PENTAGON_PARAMS = {"eps": "2/3", "delta": "3/4"}
# alpha + beta = 1 and beta = gamma: every exponent symbol of the hexagon is zero
HEXAGON_PARAMS = {"alpha": "1/3", "beta": "2/3", "gamma": "2/3"}


@pytest.fixture
def triangle() -> MomentPolytope:
    return standard_model("cp2", {"scale": "1"})


@pytest.fixture
def square() -> MomentPolytope:
    return standard_model("s2xs2", {"a": "1", "b": "2"})


@pytest.fixture
def pentagon() -> MomentPolytope:
    return standard_model("cp2-bl2", PENTAGON_PARAMS)


@pytest.fixture
def hexagon() -> MomentPolytope:
    return standard_model("cp2-bl3", HEXAGON_PARAMS)


@pytest.fixture
def pentagon_presentation(pentagon: MomentPolytope) -> QHPresentation:
    return presentation(pentagon)


@pytest.fixture
def hexagon_presentation(hexagon: MomentPolytope) -> QHPresentation:
    return presentation(hexagon)


@pytest.fixture
def pentagon_reduced(pentagon_presentation: QHPresentation) -> ReducedPresentation:
    return reduce(pentagon_presentation)


@pytest.fixture
def hexagon_reduced(hexagon_presentation: QHPresentation) -> ReducedPresentation:
    return reduce(hexagon_presentation)


@pytest.fixture
def plain() -> ParamSystem:
    """Rational coefficients, one generator ``X``."""
    return ParamSystem.of(generators=("X",))


@pytest.fixture
def with_x() -> ParamSystem:
    """One parameter ``x``, one generator ``X``."""
    return ParamSystem.of("x", generators=("X",))


@pytest.fixture
def hexagon_system() -> ParamSystem:
    return ParamSystem.of("x", "y", "z", generators=("A", "B"))


@pytest.fixture
def uni(plain: ParamSystem):
    """Parse a polynomial in ``X`` over the rationals."""

    def parse(text: str) -> UniPoly:
        return parse_unipoly(text, plain, "X")

    return parse


@pytest.fixture
def uni_x(with_x: ParamSystem):
    """Parse a polynomial in ``X`` over ``QQ(x)``."""

    def parse(text: str) -> UniPoly:
        return parse_unipoly(text, with_x, "X")

    return parse


@pytest.fixture
def var_x(with_x: ParamSystem) -> MPoly:
    return MPoly.variable(with_x, "x")
