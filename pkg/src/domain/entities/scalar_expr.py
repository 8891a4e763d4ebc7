"""Scalar expression entity: exact-rational polynomial in x^λ and y^i_Λ."""
from dataclasses import dataclass, field
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Iterator

from .bundle import Bundle, MultiIndex, Variable


# Sorted tuple of (variable, positive exponent) pairs; () is the unit monomial.
Monomial = tuple[tuple[Variable, int], ...]

ONE: Monomial = ()


def mono_from_powers(powers: Iterable[tuple[Variable, int]]) -> Monomial:
    """Build a canonical monomial, merging repeated variables."""
    acc: dict[Variable, int] = {}
    for var, exp in powers:
        if exp:
            acc[var] = acc.get(var, 0) + exp
    return tuple(sorted((v, e) for v, e in acc.items() if e))


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    if not a:
        return b
    if not b:
        return a
    return mono_from_powers(a + b)


def mono_degree(a: Monomial) -> int:
    return sum(exp for _, exp in a)


def mono_fibre_degree(a: Monomial) -> int:
    """Total degree in jet variables only."""
    return sum(exp for var, exp in a if var.is_jet)


def mono_exponent(a: Monomial, var: Variable) -> int:
    for v, e in a:
        if v == var:
            return e
    return 0


def mono_lower(a: Monomial, var: Variable) -> Monomial:
    """Divide by one power of var (var must occur)."""
    out = []
    for v, e in a:
        if v == var:
            if e > 1:
                out.append((v, e - 1))
        else:
            out.append((v, e))
    return tuple(out)


def mono_has_jets(a: Monomial) -> bool:
    return any(var.is_jet for var, _ in a)


def mono_sort_key(a: Monomial):
    """Graded order: total degree first, then the canonical variable order."""
    return (mono_degree(a), a)


Scalar = int | Fraction


@dataclass(frozen=True, eq=False)
class ScalarExpr:
    """Sparse polynomial with Fraction coefficients over a bundle's jet coordinates."""

    bundle: Bundle
    terms: dict[Monomial, Fraction] = field(default_factory=dict)

    def __post_init__(self):
        """Drop zero coefficients and coerce to Fraction."""
        clean = {}
        for mono, coef in self.terms.items():
            if coef:
                clean[mono] = Fraction(coef)
        object.__setattr__(self, "terms", clean)

    # Constructors

    @staticmethod
    def zero(bundle: Bundle) -> "ScalarExpr":
        return ScalarExpr(bundle)

    @staticmethod
    def constant(bundle: Bundle, value: Scalar) -> "ScalarExpr":
        return ScalarExpr(bundle, {ONE: Fraction(value)})

    @staticmethod
    def variable(bundle: Bundle, var: Variable) -> "ScalarExpr":
        var.validate(bundle)
        return ScalarExpr(bundle, {((var, 1),): Fraction(1)})

    @staticmethod
    def base(bundle: Bundle, lam: int) -> "ScalarExpr":
        return ScalarExpr.variable(bundle, Variable.base(lam))

    @staticmethod
    def jet(bundle: Bundle, i: int, dirs: MultiIndex = ()) -> "ScalarExpr":
        return ScalarExpr.variable(bundle, Variable.jet(i, dirs))

    # Queries

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(mono == ONE for mono in self.terms)

    def constant_value(self) -> Fraction:
        """Coefficient of the unit monomial."""
        return self.terms.get(ONE, Fraction(0))

    def items(self) -> list[tuple[Monomial, Fraction]]:
        """Terms in canonical monomial order."""
        return sorted(self.terms.items(), key=lambda item: mono_sort_key(item[0]))

    def variables(self) -> set[Variable]:
        return {var for mono in self.terms for var, _ in mono}

    def jet_variables(self) -> list[Variable]:
        return sorted(var for var in self.variables() if var.is_jet)

    def degree(self) -> int:
        """Total degree; 0 for the zero polynomial."""
        return max((mono_degree(mono) for mono in self.terms), default=0)

    def jet_order(self) -> int:
        return max((var.order for var in self.variables() if var.is_jet), default=0)

    def __iter__(self) -> Iterator[tuple[Monomial, Fraction]]:
        return iter(self.items())

    def __len__(self) -> int:
        return len(self.terms)

    # Arithmetic

    def _coerce(self, other) -> "ScalarExpr":
        if isinstance(other, ScalarExpr):
            self.bundle.require_same(other.bundle)
            return other
        if isinstance(other, (int, Rational)):
            return ScalarExpr.constant(self.bundle, Fraction(other))
        return NotImplemented

    def __add__(self, other) -> "ScalarExpr":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for mono, coef in other.terms.items():
            out[mono] = out.get(mono, 0) + coef
        return ScalarExpr(self.bundle, out)

    __radd__ = __add__

    def __neg__(self) -> "ScalarExpr":
        return ScalarExpr(self.bundle, {mono: -coef for mono, coef in self.terms.items()})

    def __sub__(self, other) -> "ScalarExpr":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> "ScalarExpr":
        return (-self) + other

    def __mul__(self, other) -> "ScalarExpr":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict[Monomial, Fraction] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                mono = mono_mul(m1, m2)
                out[mono] = out.get(mono, 0) + c1 * c2
        return ScalarExpr(self.bundle, out)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "ScalarExpr":
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError(f"Exponent must be a nonnegative integer, got {exponent}")
        result = ScalarExpr.constant(self.bundle, 1)
        for _ in range(exponent):
            result = result * self
        return result

    def scale(self, factor: Scalar) -> "ScalarExpr":
        factor = Fraction(factor)
        return ScalarExpr(self.bundle, {mono: coef * factor for mono, coef in self.terms.items()})

    def map_monomials(self, fn) -> "ScalarExpr":
        """Apply fn(mono, coef) -> iterable of (mono, coef) termwise and re-collect."""
        out: dict[Monomial, Fraction] = {}
        for mono, coef in self.terms.items():
            for new_mono, new_coef in fn(mono, coef):
                out[new_mono] = out.get(new_mono, 0) + new_coef
        return ScalarExpr(self.bundle, out)

    # Equality

    def __eq__(self, other) -> bool:
        if isinstance(other, ScalarExpr):
            return self.bundle == other.bundle and self.terms == other.terms
        if isinstance(other, (int, Rational)):
            return self.is_constant() and self.constant_value() == other
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.bundle, frozenset(self.terms.items())))

    def __repr__(self) -> str:
        parts = []
        for mono, coef in self.items():
            factors = "*".join(
                var.name if exp == 1 else f"{var.name}**{exp}" for var, exp in mono
            )
            parts.append(f"{coef}" + (f"*{factors}" if factors else ""))
        return "ScalarExpr(" + (" + ".join(parts) or "0") + ")"
