"""Exact linear forms over named exponent symbols.

A ``LinearForm`` is ``const + sum(coeff * symbol)`` with rational entries. Facet
supports and Novikov exponents (``s^{1 - eps - delta}``) are carried this way so
that every exponent stays symbolic over the declared parameters.
"""

from __future__ import annotations

from collections.abc import Iterable, Mapping
from dataclasses import dataclass, field
from fractions import Fraction

from arith.errors import UsageError
from arith.rational import RationalLike, format_rational, parse_rational


@dataclass(frozen=True, eq=False)
class LinearForm:
    const: Fraction = Fraction(0)
    coeffs: tuple[tuple[str, Fraction], ...] = field(default=())

    def __post_init__(self) -> None:
        merged: dict[str, Fraction] = {}
        for name, value in self.coeffs:
            merged[name] = merged.get(name, Fraction(0)) + Fraction(value)
        object.__setattr__(self, "const", Fraction(self.const))
        object.__setattr__(
            self, "coeffs", tuple((n, v) for n, v in merged.items() if v != 0)
        )

    @classmethod
    def constant(cls, value: RationalLike) -> LinearForm:
        return cls(parse_rational(value))

    @classmethod
    def symbol(cls, name: str, coeff: RationalLike = 1) -> LinearForm:
        return cls(Fraction(0), ((name, parse_rational(coeff)),))

    @classmethod
    def of(cls, const: RationalLike = 0, **coeffs: RationalLike) -> LinearForm:
        return cls(parse_rational(const), tuple((k, parse_rational(v)) for k, v in coeffs.items()))

    @property
    def symbols(self) -> tuple[str, ...]:
        return tuple(name for name, _ in self.coeffs)

    def coeff(self, name: str) -> Fraction:
        return dict(self.coeffs).get(name, Fraction(0))

    @property
    def is_constant(self) -> bool:
        return not self.coeffs

    def __add__(self, other: LinearForm | RationalLike) -> LinearForm:
        other = _as_form(other)
        return LinearForm(self.const + other.const, self.coeffs + other.coeffs)

    __radd__ = __add__

    def __neg__(self) -> LinearForm:
        return LinearForm(-self.const, tuple((n, -v) for n, v in self.coeffs))

    def __sub__(self, other: LinearForm | RationalLike) -> LinearForm:
        return self + (-_as_form(other))

    def __rsub__(self, other: LinearForm | RationalLike) -> LinearForm:
        return _as_form(other) - self

    def __mul__(self, scalar: RationalLike) -> LinearForm:
        k = parse_rational(scalar)
        return LinearForm(self.const * k, tuple((n, v * k) for n, v in self.coeffs))

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = LinearForm(Fraction(other))
        if not isinstance(other, LinearForm):
            return NotImplemented
        return self.const == other.const and dict(self.coeffs) == dict(other.coeffs)

    def __hash__(self) -> int:
        return hash((self.const, frozenset(self.coeffs)))

    def evaluate(self, values: Mapping[str, Fraction]) -> Fraction:
        """Numeric value once every symbol is assigned."""
        total = self.const
        for name, coeff in self.coeffs:
            if name not in values:
                raise UsageError(f"No value for exponent symbol {name!r}")
            total += coeff * Fraction(values[name])
        return total

    def substitute(self, name: str, form: LinearForm) -> LinearForm:
        k = self.coeff(name)
        if k == 0:
            return self
        rest = LinearForm(self.const, tuple((n, v) for n, v in self.coeffs if n != name))
        return rest + form * k

    def to_json(self) -> dict[str, str]:
        out = {"const": format_rational(self.const)}
        for name, value in self.coeffs:
            out[name] = format_rational(value)
        return out

    @classmethod
    def from_json(cls, data: Mapping[str, str | int]) -> LinearForm:
        const = parse_rational(data.get("const", 0))
        return cls(const, tuple((k, parse_rational(v)) for k, v in data.items() if k != "const"))

    def __str__(self) -> str:
        parts: list[str] = []
        if self.const != 0 or not self.coeffs:
            parts.append(format_rational(self.const))
        for name, value in self.coeffs:
            if value == 1:
                term = name
            elif value == -1:
                term = f"-{name}"
            else:
                term = f"{format_rational(value)}*{name}"
            parts.append(term)
        text = " + ".join(parts)
        return text.replace("+ -", "- ")

    def __repr__(self) -> str:
        return f"LinearForm({self})"


def _as_form(value: LinearForm | RationalLike) -> LinearForm:
    if isinstance(value, LinearForm):
        return value
    return LinearForm(parse_rational(value))


def combine(forms: Iterable[LinearForm], weights: Iterable[int | Fraction]) -> LinearForm:
    """``sum(w * f)`` over paired forms and weights."""
    total = LinearForm()
    for form, w in zip(forms, weights, strict=True):
        total = total + form * Fraction(w)
    return total
