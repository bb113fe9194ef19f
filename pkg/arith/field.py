"""Elements of the coefficient field: rational functions in the active parameters."""

from __future__ import annotations

from collections.abc import Mapping
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Union

from arith.errors import DomainError, UsageError
from arith.mpoly import MPoly
from arith.params import ParamSystem
from arith.rational import from_qq, to_qq

Scalar = Union[int, Fraction]


@dataclass(frozen=True, eq=False)
class FieldElem:
    """A reduced fraction in ``QQ(params)``, backed by a sympy ``FracElement``."""

    system: ParamSystem
    value: Any

    @classmethod
    def zero(cls, system: ParamSystem) -> FieldElem:
        return cls(system, system.coeff_field.zero)

    @classmethod
    def one(cls, system: ParamSystem) -> FieldElem:
        return cls(system, system.coeff_field.one)

    @classmethod
    def constant(cls, system: ParamSystem, value: Scalar) -> FieldElem:
        return cls(system, system.coeff_field.ground_new(to_qq(value)))

    @classmethod
    def from_mpoly(cls, poly: MPoly) -> FieldElem:
        """Embed a Laurent polynomial in the parameters only."""
        system = poly.system
        gens = [g for g in poly.variables_used() if g in system.generators]
        if gens:
            raise UsageError(f"{poly.to_text()} involves generators {', '.join(gens)}")
        field = system.coeff_field
        offset = len(system.generators)
        numer = field.ring.from_dict(
            {m[offset:]: to_qq(c) for m, c in _shifted(poly).items()}
        )
        denom = field.ring.from_dict({poly.shift[offset:]: to_qq(1)})
        return cls(system, field.new(numer, denom))

    @classmethod
    def from_parts(cls, numerator: MPoly, denominator: MPoly) -> FieldElem:
        den = cls.from_mpoly(denominator)
        if not den:
            raise DomainError("Zero denominator")
        return cls.from_mpoly(numerator) / den

    # -- parts -------------------------------------------------------------------

    def _normalized(self) -> tuple[Any, Any]:
        numer, denom = self.value.numer, self.value.denom
        lc = denom.LC
        return numer.quo_ground(lc), denom.quo_ground(lc)

    @property
    def numerator(self) -> MPoly:
        """Numerator, scaled so the denominator has grlex leading coefficient 1."""
        return MPoly.from_poly(self.system, self._normalized()[0])

    @property
    def denominator(self) -> MPoly:
        return MPoly.from_poly(self.system, self._normalized()[1])

    def to_mpoly(self) -> MPoly:
        """The Laurent polynomial this element equals; needs a monomial denominator."""
        den = self.denominator
        if not den.is_term:
            raise DomainError(f"{self.to_text()} is not a Laurent polynomial")
        return self.numerator.exquo(den)

    @property
    def is_laurent(self) -> bool:
        return len(self.value.denom) == 1

    def __bool__(self) -> bool:
        return bool(self.value)

    def is_zero(self) -> bool:
        return not self.value

    @property
    def is_constant(self) -> bool:
        return self.value.numer.is_ground and self.value.denom.is_ground

    def constant_value(self) -> Fraction:
        if not self.is_constant:
            raise UsageError(f"{self.to_text()} is not a constant")
        n, d = self._normalized()
        return from_qq(n.LC if n else 0) / from_qq(d.LC)

    # -- arithmetic --------------------------------------------------------------

    def _coerce(self, other: FieldElem | MPoly | Scalar) -> FieldElem:
        if isinstance(other, FieldElem):
            if other.system != self.system:
                raise UsageError("Field elements belong to different parameter systems")
            return other
        if isinstance(other, MPoly):
            if other.system != self.system:
                raise UsageError("Operands belong to different parameter systems")
            return FieldElem.from_mpoly(other)
        if isinstance(other, (int, Fraction)):
            return FieldElem.constant(self.system, other)
        return NotImplemented

    def __add__(self, other: FieldElem | MPoly | Scalar) -> FieldElem:
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return FieldElem(self.system, self.value + o.value)

    __radd__ = __add__

    def __neg__(self) -> FieldElem:
        return FieldElem(self.system, -self.value)

    def __sub__(self, other: FieldElem | MPoly | Scalar) -> FieldElem:
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return FieldElem(self.system, self.value - o.value)

    def __rsub__(self, other: FieldElem | MPoly | Scalar) -> FieldElem:
        return (-self) + other

    def __mul__(self, other: FieldElem | MPoly | Scalar) -> FieldElem:
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return FieldElem(self.system, self.value * o.value)

    __rmul__ = __mul__

    def __truediv__(self, other: FieldElem | MPoly | Scalar) -> FieldElem:
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        if not o.value:
            raise DomainError("Division by zero in the coefficient field")
        return FieldElem(self.system, self.value / o.value)

    def __rtruediv__(self, other: FieldElem | MPoly | Scalar) -> FieldElem:
        return self._coerce(other) / self

    def __pow__(self, k: int) -> FieldElem:
        if k < 0 and not self.value:
            raise DomainError("Negative power of zero")
        return FieldElem(self.system, self.value**k)

    def inverse(self) -> FieldElem:
        return self**-1

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction, MPoly)):
            try:
                other = self._coerce(other)
            except UsageError:
                return False
        if not isinstance(other, FieldElem):
            return NotImplemented
        return self.system == other.system and not (self.value - other.value)

    def __hash__(self) -> int:
        n, d = self._normalized()
        return hash((frozenset(n.items()), frozenset(d.items())))

    # -- evaluation --------------------------------------------------------------

    def evaluate(self, point: Mapping[str, Fraction | int]) -> Fraction:
        """Exact value; a vanishing denominator is a domain error."""
        num = self.numerator.evaluate(point)
        den = self.denominator.evaluate(point)
        if den == 0:
            raise DomainError(f"Denominator of {self.to_text()} vanishes at {dict(point)}")
        return num / den

    def specialize(self, point: Mapping[str, Fraction | int]) -> FieldElem:
        den = self.denominator.specialize(point)
        if not den:
            raise DomainError(f"Denominator of {self.to_text()} vanishes at {dict(point)}")
        return FieldElem.from_parts(self.numerator.specialize(point), den)

    def substitute_monomial(self, var: str, target: Mapping[str, int]) -> FieldElem:
        num = self.numerator.substitute_monomial(var, target)
        den = self.denominator.substitute_monomial(var, target)
        if not den:
            raise DomainError(f"Substituting {var} makes the denominator of {self.to_text()} vanish")
        return FieldElem.from_parts(num, den)

    def in_system(self, system: ParamSystem, rename: Mapping[str, str] | None = None, s_scale: int = 1) -> FieldElem:
        return FieldElem.from_parts(
            self.numerator.in_system(system, rename, s_scale),
            self.denominator.in_system(system, rename, s_scale),
        )

    def to_text(self) -> str:
        if self.is_laurent:
            return self.to_mpoly().to_text()
        return f"({self.numerator.to_text()})/({self.denominator.to_text()})"

    def __str__(self) -> str:
        return self.to_text()

    def __repr__(self) -> str:
        return f"FieldElem({self.to_text()})"


def _shifted(poly: MPoly) -> dict[tuple[int, ...], Fraction]:
    """Terms of ``poly`` multiplied through by its monomial denominator."""
    return {tuple(a + s for a, s in zip(m, poly.shift)): c for m, c in poly.terms().items()}
