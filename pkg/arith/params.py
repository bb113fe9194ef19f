"""Parameter systems: the variables a Novikov coefficient field is built from.

Every parameter variable ``x_j`` stands for ``s^{gamma_j}``. The base variable
``s`` itself always exists and stands for ``s^{1/N}`` where ``N`` is the base
root, so rational constants in exponents become integer powers of ``s``.
Generators (``X``, ``A``, ``B``, ...) are polynomial variables of the algebra
being presented; they share one polynomial ring with the parameters.
"""

from __future__ import annotations

import logging
import re
from collections.abc import Iterable, Mapping
from dataclasses import dataclass, field, replace
from fractions import Fraction
from functools import cached_property
from math import lcm
from typing import Any

from sympy import QQ, grlex
from sympy.polys.fields import FracField
from sympy.polys.rings import PolyRing

from arith.errors import DomainError, UsageError
from arith.linear import LinearForm

logger = logging.getLogger(__name__)

BASE = "s"

_NAME = re.compile(r"^[A-Za-z_][A-Za-z_0-9]*$")
_FACTOR = re.compile(r"^([A-Za-z_][A-Za-z_0-9]*)(?:\^(-?\d+))?$")


@dataclass(frozen=True)
class ExponentParam:
    """A formal variable ``name`` standing for ``s^{label}``.

    ``label`` is the exponent symbol used in linear forms (``eps`` for ``x``);
    ``value`` is the numeric exponent when known, kept for documentation and
    for checking declared relations.
    """

    name: str
    label: str | None = None
    value: Fraction | None = None

    @property
    def symbol(self) -> str:
        return self.label or self.name


@dataclass(frozen=True)
class MonomialRelation:
    """``target = prod(var^e)``, a substitution with coefficient 1."""

    target: str
    monomial: tuple[tuple[str, int], ...]
    text: str = ""

    def as_dict(self) -> dict[str, int]:
        return dict(self.monomial)


@dataclass(frozen=True)
class ParamSystem:
    params: tuple[ExponentParam, ...] = ()
    generators: tuple[str, ...] = ()
    relations: tuple[MonomialRelation, ...] = ()
    base_root: int = 1

    def __post_init__(self) -> None:
        if self.base_root < 1:
            raise UsageError(f"Base root must be positive, got {self.base_root}")
        params = tuple(p for p in self.params if p.name != BASE)
        base = ExponentParam(BASE, None, Fraction(1, self.base_root))
        object.__setattr__(self, "params", (base, *params))
        object.__setattr__(self, "generators", tuple(self.generators))
        object.__setattr__(self, "relations", tuple(self.relations))

        names = [p.name for p in self.params] + list(self.generators)
        for name in names:
            if not _NAME.match(name):
                raise UsageError(f"Invalid variable name {name!r}")
        dupes = sorted({n for n in names if names.count(n) > 1})
        if dupes:
            raise UsageError(f"Duplicate variable names: {', '.join(dupes)}")
        param_names = {p.name for p in self.params}
        targets = [r.target for r in self.relations]
        for rel in self.relations:
            if rel.target == BASE or rel.target not in param_names:
                raise UsageError(f"Relation target {rel.target!r} is not a substitutable parameter")
            leftover = set(rel.as_dict()) & set(targets)
            if leftover:
                raise UsageError(f"Relation for {rel.target!r} still mentions {sorted(leftover)}")
            unknown = set(rel.as_dict()) - param_names
            if unknown:
                raise UsageError(f"Relation for {rel.target!r} mentions unknown {sorted(unknown)}")

    @classmethod
    def of(
        cls,
        *names: str,
        generators: Iterable[str] = (),
        base_root: int = 1,
    ) -> ParamSystem:
        """Shorthand for parameters without labels or values."""
        return cls(tuple(ExponentParam(n) for n in names), tuple(generators), (), base_root)

    # -- variables ---------------------------------------------------------------

    @cached_property
    def param_names(self) -> tuple[str, ...]:
        return tuple(p.name for p in self.params)

    @cached_property
    def active_params(self) -> tuple[str, ...]:
        eliminated = {r.target for r in self.relations}
        return tuple(n for n in self.param_names if n not in eliminated)

    @cached_property
    def variables(self) -> tuple[str, ...]:
        return self.generators + self.active_params

    @cached_property
    def ring(self) -> Any:
        return PolyRing(list(self.variables), QQ, grlex)

    @cached_property
    def coeff_field(self) -> Any:
        return FracField(list(self.active_params), QQ, grlex)

    @cached_property
    def coeff_domain(self) -> Any:
        return self.coeff_field.to_domain()

    def uni_ring(self, var: str) -> Any:
        if var not in self.generators:
            raise UsageError(f"{var!r} is not a generator of this system")
        return PolyRing([var], self.coeff_domain, grlex)

    def index(self, name: str) -> int:
        try:
            return self.variables.index(name)
        except ValueError:
            raise UsageError(f"Unknown variable {name!r}") from None

    def param(self, name: str) -> ExponentParam:
        for p in self.params:
            if p.name == name:
                return p
        raise UsageError(f"Unknown parameter {name!r}")

    def param_for_symbol(self, symbol: str) -> ExponentParam:
        for p in self.params:
            if p.symbol == symbol or p.name == symbol:
                return p
        raise DomainError(f"Exponent symbol {symbol!r} has no parameter variable")

    # -- derived systems ---------------------------------------------------------

    def with_generators(self, generators: Iterable[str]) -> ParamSystem:
        return replace(self, generators=tuple(generators))

    def with_base_root(self, base_root: int) -> ParamSystem:
        return replace(self, base_root=base_root)

    def with_params(self, params: Iterable[ExponentParam]) -> ParamSystem:
        return replace(self, params=(*self.params[1:], *params))

    def with_relations(self, relations: Iterable[MonomialRelation]) -> ParamSystem:
        """Add relations, resolving chains so no target appears on a right-hand side."""
        resolved = list(self.relations)
        for rel in relations:
            monomial = _resolve(rel.as_dict(), resolved)
            if rel.target in monomial:
                raise UsageError(f"Relation {rel.text or rel.target!r} is circular")
            if rel.target not in self.active_params:
                raise UsageError(f"{rel.target!r} is already eliminated or not a parameter")
            new = MonomialRelation(rel.target, _sorted_monomial(monomial, self.param_names), rel.text)
            resolved = [
                replace(
                    r,
                    monomial=_sorted_monomial(_resolve(r.as_dict(), [new]), self.param_names),
                )
                for r in resolved
            ]
            resolved.append(new)
            logger.debug("Declared relation %s = %s", new.target, dict(new.monomial))
        return replace(self, relations=tuple(resolved))

    def with_generator_as_param(self, var: str) -> ParamSystem:
        """Treat generator ``var`` as a coefficient (for eliminating the other generators)."""
        if var not in self.generators:
            raise UsageError(f"{var!r} is not a generator of this system")
        return replace(
            self,
            params=(*self.params[1:], ExponentParam(var)),
            generators=tuple(g for g in self.generators if g != var),
        )

    def generic(self) -> ParamSystem:
        """The same system without declared relations."""
        return replace(self, relations=())

    # -- exponent bookkeeping ----------------------------------------------------

    def apply_relations(self, monomial: Mapping[str, int]) -> dict[str, int]:
        return _resolve(dict(monomial), self.relations)

    def monomial_for(self, form: LinearForm) -> dict[str, int]:
        """Laurent monomial in the parameters representing ``s^{form}``."""
        out: dict[str, int] = {}
        scaled = form.const * self.base_root
        if scaled.denominator != 1:
            raise DomainError(
                f"Constant exponent {form.const} is not a multiple of 1/{self.base_root}"
            )
        if scaled:
            out[BASE] = int(scaled)
        for symbol, coeff in form.coeffs:
            if coeff.denominator != 1:
                raise DomainError(f"Exponent {form} has non-integral coefficient on {symbol!r}")
            name = self.param_for_symbol(symbol).name
            out[name] = out.get(name, 0) + int(coeff)
        return {k: v for k, v in self.apply_relations(out).items() if v}

    def exponent_of(self, monomial: Mapping[str, int]) -> LinearForm:
        """Inverse of ``monomial_for`` on active parameters."""
        form = LinearForm()
        for name, e in monomial.items():
            if name == BASE:
                form = form + LinearForm(Fraction(e, self.base_root))
            else:
                form = form + LinearForm.symbol(self.param(name).symbol, e)
        return form

    def declared_values_hold(self) -> bool:
        """Whether the numeric exponent values satisfy every declared relation."""
        values = {p.name: p.value for p in self.params}
        for rel in self.relations:
            target = values.get(rel.target)
            parts = [values.get(n) for n, _ in rel.monomial]
            if target is None or any(v is None for v in parts):
                continue
            total = sum(
                (Fraction(v) * e for v, (_, e) in zip(parts, rel.monomial) if v is not None),
                Fraction(0),
            )
            if total != target:
                return False
        return True


def _resolve(monomial: dict[str, int], relations: Iterable[MonomialRelation]) -> dict[str, int]:
    out = dict(monomial)
    for rel in relations:
        e = out.pop(rel.target, 0)
        if not e:
            continue
        for name, k in rel.monomial:
            out[name] = out.get(name, 0) + e * k
    return {k: v for k, v in out.items() if v}


def _sorted_monomial(monomial: Mapping[str, int], order: tuple[str, ...]) -> tuple[tuple[str, int], ...]:
    return tuple((n, monomial[n]) for n in order if monomial.get(n))


def _split_names(token: str, names: list[str]) -> list[str]:
    """Greedy split of concatenated variable names, longest match first."""
    out: list[str] = []
    pos = 0
    candidates = sorted(names, key=len, reverse=True)
    while pos < len(token):
        for name in candidates:
            if token.startswith(name, pos):
                out.append(name)
                pos += len(name)
                break
        else:
            raise UsageError(f"Cannot read {token!r} as a product of {', '.join(names)}")
    return out


def _parse_side(text: str, names: list[str]) -> dict[str, int]:
    side = text.replace(" ", "")
    if side in ("", "1"):
        return {}
    out: dict[str, int] = {}
    for factor in side.split("*"):
        match = _FACTOR.match(factor)
        if not match:
            raise UsageError(f"Cannot read monomial factor {factor!r}")
        base, exp = match.group(1), match.group(2)
        if base in names:
            parts = [base]
        elif exp is None:
            parts = _split_names(base, names)
        else:
            raise UsageError(f"Unknown variable {base!r}")
        for i, name in enumerate(parts):
            k = int(exp) if (exp is not None and i == len(parts) - 1) else 1
            out[name] = out.get(name, 0) + k
    return out


def parse_relation(text: str, system: ParamSystem) -> MonomialRelation:
    """Read ``"y=z"`` or ``"xyz=1"`` into a substitution on ``system``'s parameters.

    The highest-indexed parameter with exponent +1 or -1 is eliminated.
    """
    if text.count("=") != 1:
        raise UsageError(f"Relation must have the form lhs=rhs, got {text!r}")
    names = [n for n in system.active_params if n != BASE]
    lhs_text, rhs_text = text.split("=")
    lhs = _parse_side(lhs_text, names)
    rhs = _parse_side(rhs_text, names)
    exponents = dict(lhs)
    for name, k in rhs.items():
        exponents[name] = exponents.get(name, 0) - k
    exponents = {k: v for k, v in exponents.items() if v}
    if not exponents:
        raise UsageError(f"Relation {text!r} is trivial")
    candidates = [n for n in names if abs(exponents.get(n, 0)) == 1]
    if not candidates:
        raise UsageError(f"Relation {text!r} cannot be solved for a single parameter")
    target = candidates[-1]
    sign = exponents[target]
    monomial = {n: -sign * e for n, e in exponents.items() if n != target}
    return MonomialRelation(target, _sorted_monomial(monomial, system.param_names), text.strip())


def merged_base_root(systems: Iterable[ParamSystem]) -> int:
    return lcm(*(s.base_root for s in systems))
