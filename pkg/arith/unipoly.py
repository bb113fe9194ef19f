"""Univariate polynomials in one generator over the coefficient field."""

from __future__ import annotations

from collections.abc import Mapping, Sequence
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Union

from arith.errors import DomainError, UsageError
from arith.field import FieldElem
from arith.mpoly import MPoly
from arith.params import ParamSystem

Scalar = Union[int, Fraction]


@dataclass(frozen=True, eq=False)
class UniPoly:
    """A polynomial in ``var`` with ``FieldElem`` coefficients.

    Backed by a sympy polynomial in ``system.uni_ring(var)``, whose ground domain
    is the fraction field of the active parameters.
    """

    system: ParamSystem
    var: str
    poly: Any

    # -- constructors ------------------------------------------------------------

    @classmethod
    def zero(cls, system: ParamSystem, var: str) -> UniPoly:
        return cls(system, var, system.uni_ring(var).zero)

    @classmethod
    def one(cls, system: ParamSystem, var: str) -> UniPoly:
        return cls(system, var, system.uni_ring(var).one)

    @classmethod
    def x(cls, system: ParamSystem, var: str) -> UniPoly:
        return cls(system, var, system.uni_ring(var).gens[0])

    @classmethod
    def from_coefficients(
        cls, system: ParamSystem, var: str, coeffs: Sequence[FieldElem | MPoly | Scalar]
    ) -> UniPoly:
        """Coefficients listed from degree 0 upwards."""
        ring = system.uni_ring(var)
        unit = FieldElem.one(system)
        data = {}
        for k, c in enumerate(coeffs):
            value = (unit * c).value
            if value:
                data[(k,)] = value
        return cls(system, var, ring.from_dict(data))

    @classmethod
    def from_mpoly(cls, poly: MPoly, var: str) -> UniPoly:
        """Read a Laurent polynomial as a polynomial in ``var``.

        Other generators must not occur and ``var`` must have nonnegative powers.
        """
        system = poly.system
        others = [g for g in poly.variables_used() if g in system.generators and g != var]
        if others:
            raise UsageError(f"{poly.to_text()} involves generators other than {var}: {others}")
        if poly and poly.min_degree(var) < 0:
            raise DomainError(f"{poly.to_text()} has negative powers of {var}")
        deg = poly.degree(var)
        coeffs = [FieldElem.from_mpoly(poly.coeff_in(var, k)) for k in range(deg + 1)]
        return cls.from_coefficients(system, var, coeffs)

    def to_mpoly(self) -> MPoly:
        """Inverse of ``from_mpoly``; every coefficient must be a Laurent polynomial."""
        total = MPoly.zero(self.system)
        x = MPoly.variable(self.system, self.var)
        for k, c in enumerate(self.coefficients()):
            if c:
                total = total + c.to_mpoly() * x**k
        return total

    # -- inspection --------------------------------------------------------------

    def coefficients(self) -> list[FieldElem]:
        """Coefficients from degree 0 to the degree."""
        out = [FieldElem.zero(self.system) for _ in range(self.degree() + 1)]
        for (k,), c in self.poly.items():
            out[k] = FieldElem(self.system, c)
        return out

    def coeff(self, k: int) -> FieldElem:
        c = self.poly.get((k,))
        if c is None:
            return FieldElem.zero(self.system)
        return FieldElem(self.system, c)

    def degree(self) -> int:
        """Degree in ``var``; -1 for the zero polynomial."""
        return self.poly.degree() if self.poly else -1

    def lc(self) -> FieldElem:
        if not self.poly:
            raise UsageError("Zero polynomial has no leading coefficient")
        return FieldElem(self.system, self.poly.LC)

    def is_zero(self) -> bool:
        return not self.poly

    def __bool__(self) -> bool:
        return bool(self.poly)

    @property
    def is_constant(self) -> bool:
        return self.degree() <= 0

    # -- arithmetic --------------------------------------------------------------

    def _coerce(self, other: UniPoly | FieldElem | MPoly | Scalar) -> UniPoly:
        if isinstance(other, UniPoly):
            if other.system != self.system or other.var != self.var:
                raise UsageError("Univariate polynomials over different systems or variables")
            return other
        if isinstance(other, MPoly):
            return UniPoly.from_mpoly(other, self.var)
        if isinstance(other, (FieldElem, int, Fraction)):
            return UniPoly.from_coefficients(self.system, self.var, [other])
        return NotImplemented

    def _new(self, poly: Any) -> UniPoly:
        return UniPoly(self.system, self.var, poly)

    def __add__(self, other: UniPoly | FieldElem | MPoly | Scalar) -> UniPoly:
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self._new(self.poly + o.poly)

    __radd__ = __add__

    def __neg__(self) -> UniPoly:
        return self._new(-self.poly)

    def __sub__(self, other: UniPoly | FieldElem | MPoly | Scalar) -> UniPoly:
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self._new(self.poly - o.poly)

    def __rsub__(self, other: UniPoly | FieldElem | MPoly | Scalar) -> UniPoly:
        return (-self) + other

    def __mul__(self, other: UniPoly | FieldElem | MPoly | Scalar) -> UniPoly:
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self._new(self.poly * o.poly)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> UniPoly:
        if k < 0:
            raise DomainError("Negative powers of univariate polynomials are not defined")
        return self._new(self.poly**k)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction, FieldElem)):
            other = self._coerce(other)
        if not isinstance(other, UniPoly):
            return NotImplemented
        return self.system == other.system and self.var == other.var and not (self.poly - other.poly)

    def __hash__(self) -> int:
        return hash((self.var, tuple(self.coefficients())))

    def derivative(self) -> UniPoly:
        return self._new(self.poly.diff(self.poly.ring.gens[0]))

    def monic(self) -> UniPoly:
        if not self.poly:
            return self
        return self._new(self.poly.monic())

    def divmod(self, other: UniPoly) -> tuple[UniPoly, UniPoly]:
        o = self._coerce(other)
        if not o.poly:
            raise DomainError("Division by the zero polynomial")
        q, r = self.poly.div(o.poly)
        return self._new(q), self._new(r)

    def rem(self, other: UniPoly) -> UniPoly:
        return self.divmod(other)[1]

    def __mod__(self, other: UniPoly) -> UniPoly:
        return self.rem(other)

    def exquo(self, other: UniPoly) -> UniPoly:
        q, r = self.divmod(other)
        if r:
            raise DomainError(f"{other.to_text()} does not divide {self.to_text()}")
        return q

    def divides(self, other: UniPoly) -> bool:
        return not other.rem(self)

    def compose_monomial(self, k: int) -> UniPoly:
        """``f(var^k)``."""
        return self._new(self.poly.ring.from_dict({(e * k,): c for (e,), c in self.poly.items()}))

    # -- evaluation and substitution ---------------------------------------------

    def specialize(self, point: Mapping[str, Fraction | int]) -> UniPoly:
        """Specialize the coefficients; the result has rational coefficients."""
        return UniPoly.from_coefficients(
            self.system, self.var, [c.specialize(point) for c in self.coefficients()]
        )

    def evaluate_at(self, value: FieldElem | Scalar) -> FieldElem:
        """Horner evaluation at an element of the coefficient field."""
        unit = FieldElem.one(self.system)
        a = unit * value
        acc = FieldElem.zero(self.system)
        for c in reversed(self.coefficients()):
            acc = acc * a + c
        return acc

    def substitute_monomial(self, var: str, target: Mapping[str, int]) -> UniPoly:
        """Substitute inside the coefficients (``var`` must be a parameter)."""
        if var == self.var:
            raise UsageError("Use compose_monomial to substitute the main variable")
        return UniPoly.from_coefficients(
            self.system,
            self.var,
            [c.substitute_monomial(var, target) for c in self.coefficients()],
        )

    def in_system(self, system: ParamSystem, rename: Mapping[str, str] | None = None, s_scale: int = 1) -> UniPoly:
        var = (rename or {}).get(self.var, self.var)
        return UniPoly.from_coefficients(
            system, var, [c.in_system(system, rename, s_scale) for c in self.coefficients()]
        )

    def to_text(self) -> str:
        """Canonical text when every coefficient is Laurent, else coefficient form."""
        if all(c.is_laurent for c in self.coefficients()):
            return self.to_mpoly().to_text()
        if not self.poly:
            return "0"
        pieces = []
        for k in range(self.degree(), -1, -1):
            c = self.coeff(k)
            if not c:
                continue
            mono = "" if k == 0 else (self.var if k == 1 else f"{self.var}^{k}")
            pieces.append(f"({c.to_text()})" + (f" * {mono}" if mono else ""))
        return " + ".join(pieces)

    def __str__(self) -> str:
        return self.to_text()

    def __repr__(self) -> str:
        return f"UniPoly({self.var}: {self.to_text()})"
