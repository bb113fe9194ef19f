"""Sparse multivariate Laurent polynomials over QQ.

An ``MPoly`` is stored as ``numer / m`` where ``numer`` lives in the system's
sympy ``PolyRing`` (grlex over generators then active parameters) and ``m`` is
a monomial given by its exponent tuple ``shift``. The pair is kept reduced: for
every variable with positive shift, ``numer`` is not divisible by it.
"""

from __future__ import annotations

from collections.abc import Iterable, Mapping
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Union

from arith.errors import DomainError, UsageError
from arith.params import ParamSystem
from arith.rational import format_rational, from_qq, to_qq

Monom = tuple[int, ...]
Scalar = Union[int, Fraction]


@dataclass(frozen=True, eq=False)
class MPoly:
    system: ParamSystem
    numer: Any
    shift: Monom

    def __post_init__(self) -> None:
        numer, shift = self.numer, tuple(self.shift)
        if len(shift) != self.system.ring.ngens:
            raise UsageError("Monomial denominator does not match the system")
        if not numer:
            shift = (0,) * len(shift)
        elif any(shift):
            tails = numer.tail_degrees()
            cut = tuple(min(t, s) for t, s in zip(tails, shift))
            if any(cut):
                numer = _divide_monom(numer, cut)
                shift = tuple(s - c for s, c in zip(shift, cut))
        object.__setattr__(self, "numer", numer)
        object.__setattr__(self, "shift", shift)

    # -- constructors ------------------------------------------------------------

    @classmethod
    def zero(cls, system: ParamSystem) -> MPoly:
        return cls(system, system.ring.zero, (0,) * system.ring.ngens)

    @classmethod
    def one(cls, system: ParamSystem) -> MPoly:
        return cls.constant(system, 1)

    @classmethod
    def constant(cls, system: ParamSystem, value: Scalar) -> MPoly:
        return cls(system, system.ring.ground_new(to_qq(value)), (0,) * system.ring.ngens)

    @classmethod
    def variable(cls, system: ParamSystem, name: str) -> MPoly:
        return cls.monomial(system, {name: 1})

    @classmethod
    def monomial(cls, system: ParamSystem, exponents: Mapping[str, int], coeff: Scalar = 1) -> MPoly:
        """``coeff * prod(var^e)`` with declared relations applied."""
        resolved = _apply_relations(system, exponents)
        vec = [0] * len(system.variables)
        for name, e in resolved.items():
            vec[system.index(name)] += e
        return cls.from_terms(system, {tuple(vec): coeff})

    @classmethod
    def from_terms(cls, system: ParamSystem, terms: Mapping[Monom, Scalar]) -> MPoly:
        """Build from Laurent exponent vectors indexed like ``system.variables``."""
        n = len(system.variables)
        items = [(tuple(m), Fraction(c)) for m, c in terms.items() if c]
        if not items:
            return cls.zero(system)
        for m, _ in items:
            if len(m) != n:
                raise UsageError(f"Exponent vector {m} does not match {n} variables")
        shift = tuple(max(0, -min(m[i] for m, _ in items)) for i in range(n))
        data: dict[Monom, Any] = {}
        for m, c in items:
            key = tuple(a + s for a, s in zip(m, shift))
            data[key] = data.get(key, 0) + c
        ring = system.ring
        numer = ring.from_dict({k: to_qq(v) for k, v in data.items() if v})
        return cls(system, numer, shift)

    @classmethod
    def from_named_terms(
        cls, system: ParamSystem, terms: Iterable[tuple[Mapping[str, int], Scalar]]
    ) -> MPoly:
        """Sum of ``coeff * monomial`` with monomials given by variable name."""
        total = cls.zero(system)
        for exponents, coeff in terms:
            total = total + cls.monomial(system, exponents, coeff)
        return total

    @classmethod
    def from_poly(cls, system: ParamSystem, poly: Any) -> MPoly:
        """Wrap a sympy polynomial whose ring has a subset of the system's variables."""
        names = [str(s) for s in poly.ring.symbols]
        idx = [system.index(n) for n in names]
        n = len(system.variables)
        terms: dict[Monom, Fraction] = {}
        for m, c in poly.items():
            vec = [0] * n
            for i, e in zip(idx, m):
                vec[i] += e
            terms[tuple(vec)] = from_qq(c)
        return cls.from_terms(system, terms)

    # -- inspection --------------------------------------------------------------

    def terms(self) -> dict[Monom, Fraction]:
        """Laurent exponent vector to coefficient."""
        return {
            tuple(a - s for a, s in zip(m, self.shift)): from_qq(c) for m, c in self.numer.items()
        }

    def named_terms(self) -> list[tuple[dict[str, int], Fraction]]:
        names = self.system.variables
        return [
            ({names[i]: e for i, e in enumerate(m) if e}, c) for m, c in self.sorted_terms()
        ]

    def sorted_terms(self) -> list[tuple[Monom, Fraction]]:
        """Terms in grlex-descending order."""
        return sorted(self.terms().items(), key=lambda t: (sum(t[0]), t[0]), reverse=True)

    def is_zero(self) -> bool:
        return not self.numer

    def __bool__(self) -> bool:
        return bool(self.numer)

    @property
    def is_term(self) -> bool:
        return len(self.numer) == 1

    @property
    def is_constant(self) -> bool:
        return not self.numer or (self.numer.is_ground and not any(self.shift))

    def constant_value(self) -> Fraction:
        if not self.is_constant:
            raise UsageError(f"{self.to_text()} is not a constant")
        return self.terms().get((0,) * len(self.shift), Fraction(0))

    def variables_used(self) -> tuple[str, ...]:
        used = set()
        for m in self.terms():
            used.update(i for i, e in enumerate(m) if e)
        return tuple(self.system.variables[i] for i in sorted(used))

    def degree(self, var: str) -> int:
        """Highest exponent of ``var``; -1 for the zero polynomial."""
        if not self:
            return -1
        i = self.system.index(var)
        return max(m[i] for m in self.terms())

    def min_degree(self, var: str) -> int:
        if not self:
            return 0
        i = self.system.index(var)
        return min(m[i] for m in self.terms())

    def coeff_in(self, var: str, k: int) -> MPoly:
        """Coefficient of ``var^k`` as a polynomial in the remaining variables."""
        i = self.system.index(var)
        return MPoly.from_terms(
            self.system,
            {m[:i] + (0,) + m[i + 1 :]: c for m, c in self.terms().items() if m[i] == k},
        )

    def leading_term(self) -> tuple[Monom, Fraction]:
        if not self:
            raise UsageError("Zero polynomial has no leading term")
        return self.sorted_terms()[0]

    def leading_term_in(self, names: Iterable[str]) -> tuple[Monom, Fraction]:
        """Leading term for grlex restricted to ``names``; ties by full grlex."""
        idx = [self.system.index(n) for n in names]

        def key(t: tuple[Monom, Fraction]) -> tuple[Any, ...]:
            sub = tuple(t[0][i] for i in idx)
            return (sum(sub), sub, sum(t[0]), t[0])

        return max(self.terms().items(), key=key)

    def monomial_content(self) -> Monom:
        """Largest Laurent monomial dividing every term."""
        if not self:
            return (0,) * len(self.shift)
        terms = list(self.terms())
        return tuple(min(m[i] for m in terms) for i in range(len(self.shift)))

    # -- arithmetic --------------------------------------------------------------

    def _coerce(self, other: MPoly | Scalar) -> MPoly:
        if isinstance(other, MPoly):
            if other.system != self.system:
                raise UsageError("Polynomials belong to different parameter systems")
            return other
        if isinstance(other, (int, Fraction)):
            return MPoly.constant(self.system, other)
        return NotImplemented

    def __add__(self, other: MPoly | Scalar) -> MPoly:
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        common = tuple(max(a, b) for a, b in zip(self.shift, o.shift))
        left = self.numer.mul_monom(tuple(c - a for c, a in zip(common, self.shift)))
        right = o.numer.mul_monom(tuple(c - b for c, b in zip(common, o.shift)))
        return MPoly(self.system, left + right, common)

    __radd__ = __add__

    def __neg__(self) -> MPoly:
        return MPoly(self.system, -self.numer, self.shift)

    def __sub__(self, other: MPoly | Scalar) -> MPoly:
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other: MPoly | Scalar) -> MPoly:
        return (-self) + other

    def __mul__(self, other: MPoly | Scalar) -> MPoly:
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        shift = tuple(a + b for a, b in zip(self.shift, o.shift))
        return MPoly(self.system, self.numer * o.numer, shift)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> MPoly:
        if k >= 0:
            return MPoly(self.system, self.numer**k, tuple(s * k for s in self.shift))
        if not self.is_term:
            raise DomainError(f"Negative power of non-monomial {self.to_text()}")
        ((m, c),) = self.terms().items()
        return MPoly.from_terms(self.system, {tuple(-e * (-k) for e in m): Fraction(1) / c ** (-k)})

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = MPoly.constant(self.system, other)
        if not isinstance(other, MPoly):
            return NotImplemented
        return (
            self.system == other.system
            and self.shift == other.shift
            and self.numer == other.numer
        )

    def __hash__(self) -> int:
        return hash((self.shift, frozenset(self.terms().items())))

    def mul_monom(self, monom: Monom) -> MPoly:
        """Multiply by a Laurent monomial."""
        pos = tuple(max(e, 0) for e in monom)
        neg = tuple(max(-e, 0) for e in monom)
        shift = tuple(s + n for s, n in zip(self.shift, neg))
        return MPoly(self.system, self.numer.mul_monom(pos), shift)

    def scale(self, c: Scalar) -> MPoly:
        return self * Fraction(c)

    def exquo(self, other: MPoly) -> MPoly:
        """Exact quotient in the Laurent ring; ``DomainError`` if it does not exist."""
        o = self._coerce(other)
        if not o:
            raise DomainError("Division by the zero polynomial")
        tails = o.numer.tail_degrees()
        core = _divide_monom(o.numer, tails)
        q, r = self.numer.div(core)
        if r:
            raise DomainError(f"{o.to_text()} does not divide {self.to_text()}")
        # self / o = (q / x^self.shift) * x^(o.shift - tails)
        adjust = tuple(so - t for so, t in zip(o.shift, tails))
        return MPoly(self.system, q, self.shift).mul_monom(adjust)

    def divides(self, other: MPoly) -> bool:
        try:
            other.exquo(self)
        except DomainError:
            return False
        return True

    def primitive_part(self) -> MPoly:
        """Divide out the monomial content."""
        return self.mul_monom(tuple(-e for e in self.monomial_content()))

    # -- substitution and evaluation ---------------------------------------------

    def specialize(self, point: Mapping[str, Fraction | int]) -> MPoly:
        """Assign rational values to some variables."""
        idx = {self.system.index(n): Fraction(v) for n, v in point.items()}
        out: dict[Monom, Fraction] = {}
        for m, c in self.terms().items():
            value = c
            key = list(m)
            for i, v in idx.items():
                e = m[i]
                if e < 0 and v == 0:
                    raise DomainError(
                        f"Zero assigned to {self.system.variables[i]} with negative exponent"
                    )
                if e:
                    value *= v**e
                key[i] = 0
            k = tuple(key)
            out[k] = out.get(k, Fraction(0)) + value
        return MPoly.from_terms(self.system, out)

    def evaluate(self, point: Mapping[str, Fraction | int]) -> Fraction:
        """Exact value; every variable that occurs must be assigned."""
        missing = [n for n in self.variables_used() if n not in point]
        if missing:
            raise UsageError(f"No value for {', '.join(missing)}")
        return self.specialize({n: point[n] for n in self.variables_used()}).constant_value()

    def substitute_monomial(self, var: str, target: Mapping[str, int]) -> MPoly:
        """Replace ``var`` by a Laurent monomial in the other variables."""
        if target.get(var):
            raise UsageError(f"Target monomial for {var!r} mentions {var!r}")
        i = self.system.index(var)
        tvec = [0] * len(self.shift)
        for name, e in target.items():
            tvec[self.system.index(name)] += e
        out: dict[Monom, Fraction] = {}
        for m, c in self.terms().items():
            e = m[i]
            key = tuple(
                (0 if j == i else m[j]) + e * tvec[j] for j in range(len(m))
            )
            out[key] = out.get(key, Fraction(0)) + c
        return MPoly.from_terms(self.system, out)

    def substitute(self, var: str, value: MPoly) -> MPoly:
        """Replace ``var`` by a Laurent polynomial free of ``var``."""
        value = self._coerce(value)
        if value.degree(var) > 0 or value.min_degree(var) < 0:
            raise UsageError(f"Substituted value mentions {var!r}")
        i = self.system.index(var)
        groups: dict[int, dict[Monom, Fraction]] = {}
        for m, c in self.terms().items():
            groups.setdefault(m[i], {})[m[:i] + (0,) + m[i + 1 :]] = c
        total = MPoly.zero(self.system)
        for k, part in sorted(groups.items()):
            total = total + MPoly.from_terms(self.system, part) * value**k
        return total

    def in_system(self, system: ParamSystem, rename: Mapping[str, str] | None = None, s_scale: int = 1) -> MPoly:
        """Re-express in another system: rename, rescale ``s``, apply its relations."""
        rename = rename or {}
        names = self.system.variables
        out = MPoly.zero(system)
        for m, c in self.terms().items():
            exps: dict[str, int] = {}
            for i, e in enumerate(m):
                if not e:
                    continue
                name = rename.get(names[i], names[i])
                exps[name] = exps.get(name, 0) + (e * s_scale if names[i] == "s" else e)
            out = out + MPoly.monomial(system, exps, c)
        return out

    # -- text --------------------------------------------------------------------

    def to_text(self) -> str:
        """Canonical text: grlex-descending ``coef * x^e*X`` terms, parameters before generators."""
        if not self:
            return "0"
        names = self.system.variables
        gens = len(self.system.generators)
        order = [*range(gens, len(names)), *range(gens)]
        pieces: list[str] = []
        for m, c in self.sorted_terms():
            mono = "*".join(
                names[i] if m[i] == 1 else f"{names[i]}^{m[i]}" for i in order if m[i]
            )
            mag = abs(c)
            if not mono:
                body = format_rational(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{format_rational(mag)} * {mono}"
            if not pieces:
                pieces.append(body if c > 0 else f"-{body}")
            else:
                pieces.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(pieces)

    def __str__(self) -> str:
        return self.to_text()

    def __repr__(self) -> str:
        return f"MPoly({self.to_text()})"


def _divide_monom(numer: Any, monom: Monom) -> Any:
    ring = numer.ring
    return ring.from_dict(
        {tuple(a - b for a, b in zip(m, monom)): c for m, c in numer.items()}
    )


def _apply_relations(system: ParamSystem, exponents: Mapping[str, int]) -> dict[str, int]:
    gens = {k: v for k, v in exponents.items() if k in system.generators}
    params = {k: v for k, v in exponents.items() if k not in system.generators}
    return {**gens, **system.apply_relations(params)}
