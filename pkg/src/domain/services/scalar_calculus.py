"""Partial, total and scaling operations on scalar expressions."""
from fractions import Fraction
from typing import Literal

from ..entities.bundle import MultiIndex, Variable
from ..entities.scalar_expr import ScalarExpr, mono_exponent, mono_fibre_degree, mono_lower, mono_mul


ArithKind = Literal["add", "sub", "mul"]


class ScalarCalculus:
    """Domain service for the polynomial ring over jet coordinates."""

    @staticmethod
    def arith(a: ScalarExpr, b: ScalarExpr, kind: ArithKind) -> ScalarExpr:
        """
        Exact ring operation.

        Raises:
            BundleMismatchError: If a and b live over different bundles
        """
        a.bundle.require_same(b.bundle)
        if kind == "add":
            return a + b
        if kind == "sub":
            return a - b
        if kind == "mul":
            return a * b
        raise ValueError(f"Unknown arithmetic kind: {kind}")

    @staticmethod
    def partial(f: ScalarExpr, var: Variable) -> ScalarExpr:
        """Formal partial derivative by one coordinate, all others held fixed."""

        def term(mono, coef):
            exp = mono_exponent(mono, var)
            if exp:
                yield mono_lower(mono, var), coef * exp

        return f.map_monomials(term)

    @staticmethod
    def partial_base(f: ScalarExpr, lam: int) -> ScalarExpr:
        """∂_λ f with every jet variable treated as a constant."""
        f.bundle.check_base(lam)
        return ScalarCalculus.partial(f, Variable.base(lam))

    @staticmethod
    def partial_jet(f: ScalarExpr, i: int, dirs: MultiIndex = ()) -> ScalarExpr:
        """∂_i^Λ f, the partial derivative by y^i_Λ."""
        f.bundle.check_fibre(i)
        f.bundle.check_multi_index(tuple(dirs))
        return ScalarCalculus.partial(f, Variable.jet(i, dirs))

    @staticmethod
    def total_derivative(f: ScalarExpr, lam: int) -> ScalarExpr:
        """
        d_λ f = ∂_λ f + Σ y^i_{Λ+λ} ∂_i^Λ f over the jets occurring in f.

        Args:
            f: Scalar expression
            lam: Base direction in [1, n]

        Returns:
            Total derivative; its jet order is at most jet_order(f) + 1
        """
        f.bundle.check_base(lam)
        base = Variable.base(lam)

        def term(mono, coef):
            for var, exp in mono:
                lowered = mono_lower(mono, var)
                if var == base:
                    yield lowered, coef * exp
                elif var.is_jet:
                    yield mono_mul(lowered, ((var.prolong(lam), 1),)), coef * exp

        return f.map_monomials(term)

    @staticmethod
    def total_derivative_multi(f: ScalarExpr, dirs: MultiIndex) -> ScalarExpr:
        """d_Λ f; the empty multi-index is the identity."""
        for lam in dirs:
            f = ScalarCalculus.total_derivative(f, lam)
        return f

    @staticmethod
    def fibre_scale(f: ScalarExpr) -> dict[int, ScalarExpr]:
        """
        Substitute y^i_Λ -> t·y^i_Λ.

        Returns:
            Polynomial in t as {power: coefficient}; a monomial of fibre
            degree p lands in power p
        """
        parts: dict[int, dict] = {}
        for mono, coef in f.terms.items():
            parts.setdefault(mono_fibre_degree(mono), {})[mono] = coef
        return {p: ScalarExpr(f.bundle, terms) for p, terms in sorted(parts.items())}

    @staticmethod
    def jet_order(f: ScalarExpr) -> int:
        """Max |Λ| over occurring jet variables; 0 when none occur."""
        return f.jet_order()

    @staticmethod
    def has_vanishing_total_derivatives(f: ScalarExpr) -> bool:
        """True iff d_λ f = 0 for every base direction."""
        return all(
            ScalarCalculus.total_derivative(f, lam).is_zero()
            for lam in range(1, f.bundle.n + 1)
        )

    @staticmethod
    def substitute_zero_section(f: ScalarExpr) -> ScalarExpr:
        """f(x, y = 0): keep only monomials free of jet variables."""
        return ScalarExpr(
            f.bundle,
            {mono: coef for mono, coef in f.terms.items() if mono_fibre_degree(mono) == 0},
        )

    @staticmethod
    def divide_by_weight(f: ScalarExpr, shift: int) -> ScalarExpr:
        """Divide each monomial by (fibre degree + shift); drop monomials of weight 0."""

        def term(mono, coef):
            weight = mono_fibre_degree(mono) + shift
            if weight:
                yield mono, coef / Fraction(weight)

        return f.map_monomials(term)
