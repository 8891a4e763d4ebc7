"""Fibre-scaling homotopy, De Rham decomposition and Tonti Lagrangians."""
from fractions import Fraction

import sympy

from ..entities.form import Form, word_bidegree
from ..entities.scalar_expr import ScalarExpr
from ..entities.source_form import SourceForm
from ..errors.exceptions import PreconditionViolationError, SelfCheckFailedError
from .differentials import Differentials
from .euler_operators import EulerOperators
from .exterior_algebra import ExteriorAlgebra
from .scalar_calculus import ScalarCalculus


class HomotopyOperators:
    """Domain service inverting d_V and d up to the zero-section pullback."""

    @staticmethod
    def koszul_homotopy(form: Form) -> Form:
        """
        Closed-form fibre-scaling homotopy.

        A term with k contact factors and coefficient monomial of fibre degree p maps to
        ȳ⌋term / (k + p); terms with k = p = 0 map to zero.

        Args:
            form: Any form (dy generators are converted first)

        Returns:
            H(φ) with d_v(H φ) + H(d_v φ) = φ - zero_section_pullback(φ)
        """
        form = ExteriorAlgebra.convert_dy_to_contact(form)
        scaled = {
            word: ScalarCalculus.divide_by_weight(coef, word_bidegree(word)[0])
            for word, coef in form.components.items()
        }
        return ExteriorAlgebra.euler_contraction(Form(form.bundle, scaled))

    @staticmethod
    def koszul_homotopy_integral(form: Form) -> Form:
        """
        The same operator as the parameter integral ∫₀¹ t^(k-1) (ȳ⌋φ)(x, ty) dt.

        Evaluated term by term with exact rational integration; kept as a cross-check
        for the closed form.
        """
        form = ExteriorAlgebra.convert_dy_to_contact(form)
        t = sympy.Symbol("t")
        result = Form.zero(form.bundle)
        for word, coef in form.components.items():
            k = word_bidegree(word)[0]
            if k == 0:
                continue
            for p, part in ScalarCalculus.fibre_scale(coef).items():
                weight = sympy.integrate(t ** (k - 1 + p), (t, 0, 1))
                factor = Fraction(int(weight.p), int(weight.q))
                contracted = ExteriorAlgebra.euler_contraction(Form.from_word(part, word))
                result = result + contracted * factor
        return result

    @staticmethod
    def dv_potential(form: Form) -> tuple[Form, Form]:
        """
        Vertical exactness: φ = d_v(σ) + φ_X.

        Returns:
            (σ, φ_X)

        Raises:
            PreconditionViolationError: If d_v(φ) != 0
        """
        if not Differentials.d_v(form).is_zero():
            raise PreconditionViolationError("dv_potential expects a d_v-closed form")
        sigma = HomotopyOperators.koszul_homotopy(form)
        return sigma, ExteriorAlgebra.zero_section_pullback(form)

    @staticmethod
    def poincare_decompose(form: Form) -> tuple[Form, Form]:
        """
        De Rham decomposition of a closed form: φ = φ_X + d(ξ).

        Returns:
            (φ_X, ξ)

        Raises:
            PreconditionViolationError: If d(φ) != 0
        """
        if not Differentials.d_full(form).is_zero():
            raise PreconditionViolationError("poincare_decompose expects a d-closed form")
        xi = HomotopyOperators.koszul_homotopy(form)
        return ExteriorAlgebra.zero_section_pullback(form), xi

    @staticmethod
    def horizontal_decompose(form: Form) -> tuple[Form, Form]:
        """
        Horizontal shadow of the De Rham decomposition: h_0(φ) = φ_X + d_h(η).

        Returns:
            (φ_X, η) with η = h_0(H φ)

        Raises:
            PreconditionViolationError: If d(φ) != 0
        """
        phi_x, xi = HomotopyOperators.poincare_decompose(form)
        return phi_x, ExteriorAlgebra.horizontal_projection(xi)

    @staticmethod
    def require_dh_exact_candidate(form: Form) -> tuple[int, int]:
        """
        Check that a nonzero form can be d_h-exact.

        For s < n the form must be d_h-closed; for s = n the Lagrangian must be
        variationally trivial (k = 0) or the form must lie in the kernel of τ_k.

        Returns:
            The bidegree (k, s)

        Raises:
            BidegreeError: If the form is not of pure bidegree
            PreconditionViolationError: If the form has no d_h-potential
        """
        bundle = form.bundle
        form = ExteriorAlgebra.convert_dy_to_contact(form)
        k, s = form.bidegree()
        if s == 0:
            raise PreconditionViolationError("A d_h-potential needs horizontal degree s >= 1")
        if s < bundle.n:
            if not Differentials.d_h(form).is_zero():
                raise PreconditionViolationError(f"Form of bidegree ({k}, {s}) is not d_h-closed")
        elif k == 0:
            lagrangian = form.coefficient(Form.volume_word(bundle))
            if not EulerOperators.is_variationally_trivial(lagrangian):
                raise PreconditionViolationError("Lagrangian is not variationally trivial")
        elif not EulerOperators.interior_euler(form, k).is_zero():
            raise PreconditionViolationError(f"τ_{k} of the form does not vanish")
        return k, s

    @staticmethod
    def tonti_lagrangian(source: SourceForm) -> ScalarExpr:
        """
        Lagrangian L = Σ_i ∫₀¹ y^i Δ_i(x, ty) dt of a locally variational source form.

        Raises:
            PreconditionViolationError: If helmholtz(Δ) != 0
            SelfCheckFailedError: If euler_lagrange(L) != Δ
        """
        bundle = source.bundle
        obstruction = EulerOperators.helmholtz(source)
        if not obstruction.is_zero():
            raise PreconditionViolationError(
                f"Source form is not locally variational: Helmholtz expression {obstruction!r} != 0"
            )
        lagrangian = ScalarExpr.zero(bundle)
        for i, comp in enumerate(source.components, start=1):
            lagrangian = lagrangian + ScalarExpr.jet(bundle, i) * ScalarCalculus.divide_by_weight(comp, 1)
        if EulerOperators.euler_lagrange(lagrangian) != source:
            raise SelfCheckFailedError("Tonti Lagrangian does not reproduce its source form")
        return lagrangian
