"""Horizontal, vertical and full differentials of the variational bicomplex."""
from enum import Enum

from ..entities.bundle import Variable
from ..entities.form import Form, Generator, Word, sort_word
from ..entities.scalar_expr import ScalarExpr
from ..errors.exceptions import PreconditionViolationError
from .exterior_algebra import ExteriorAlgebra
from .scalar_calculus import ScalarCalculus


class Differential(str, Enum):
    """Differential selector for closedness tests."""

    D_H = "d_h"
    D_V = "d_v"
    D_FULL = "d_full"


class Differentials:
    """Domain service for d_H, d_V, d = d_H + d_V and the classical d."""

    @staticmethod
    def total_derivative_form(form: Form, lam: int) -> Form:
        """
        d_λ acting on a form as a degree-0 derivation.

        Coefficients get total derivatives, θ^i_Λ -> θ^i_{Λ+λ}, dx^μ -> 0.
        """
        bundle = form.bundle
        bundle.check_base(lam)
        out: dict[Word, ScalarExpr] = {}

        def add(word, coef):
            if not coef.is_zero():
                out[word] = out[word] + coef if word in out else coef

        for word, coef in form.components.items():
            add(word, ScalarCalculus.total_derivative(coef, lam))
            for j, gen in enumerate(word):
                if not gen.is_vertical:
                    continue
                placed = sort_word(word[:j] + (gen.prolong(lam),) + word[j + 1:])
                if placed is None:
                    continue
                sign, new_word = placed
                add(new_word, coef if sign > 0 else -coef)
        return Form(bundle, out)

    @staticmethod
    def total_derivative_form_multi(form: Form, dirs) -> Form:
        """d_Λ on forms."""
        for lam in dirs:
            form = Differentials.total_derivative_form(form, lam)
        return form

    @staticmethod
    def d_h(form: Form) -> Form:
        """
        Horizontal differential d_H φ = dx^λ ∧ d_λ φ.

        Args:
            form: Form (dy generators are converted to the contact basis first)

        Returns:
            Form of bidegree (k, s+1) for each (k, s) component
        """
        form = ExteriorAlgebra.convert_dy_to_contact(form)
        bundle = form.bundle
        result = Form.zero(bundle)
        for lam in range(1, bundle.n + 1):
            d_lam = Differentials.total_derivative_form(form, lam)
            if not d_lam.is_zero():
                result = result + ExteriorAlgebra.wedge(Form.dx(bundle, lam), d_lam)
        return result

    @staticmethod
    def d_v(form: Form) -> Form:
        """
        Vertical differential d_V φ = θ^i_Λ ∧ ∂_i^Λ φ.

        Only coefficients are differentiated; generators are d_V-constants.
        """
        form = ExteriorAlgebra.convert_dy_to_contact(form)
        bundle = form.bundle
        result = Form.zero(bundle)
        for word, coef in form.components.items():
            for var in coef.jet_variables():
                partial = ScalarCalculus.partial(coef, var)
                theta = Form.generator(bundle, Generator.theta(var.index, var.dirs))
                result = result + ExteriorAlgebra.wedge(theta, Form.from_word(partial, word))
        return result

    @staticmethod
    def d_full(form: Form) -> Form:
        """d = d_H + d_V."""
        return Differentials.d_h(form) + Differentials.d_v(form)

    @staticmethod
    def d_classic(form: Form) -> Form:
        """
        Classical exterior derivative in the dx/dy basis.

        Every coordinate x^λ, y^i_Λ is independent; d(dx) = d(dy) = 0.

        Raises:
            PreconditionViolationError: If the form contains θ generators
        """
        if form.has_theta():
            raise PreconditionViolationError("d_classic expects a form in the dx/dy basis")
        bundle = form.bundle
        result = Form.zero(bundle)
        for word, coef in form.components.items():
            for var in sorted(coef.variables()):
                partial = ScalarCalculus.partial(coef, var)
                if var.kind == Variable.BASE:
                    gen = Generator.dx(var.index)
                else:
                    gen = Generator.dy(var.index, var.dirs)
                result = result + ExteriorAlgebra.wedge(
                    Form.generator(bundle, gen), Form.from_word(partial, word)
                )
        return result

    @staticmethod
    def apply(form: Form, operator: Differential) -> Form:
        operator = Differential(operator)
        if operator is Differential.D_H:
            return Differentials.d_h(form)
        if operator is Differential.D_V:
            return Differentials.d_v(form)
        return Differentials.d_full(form)

    @staticmethod
    def is_closed(form: Form, operator: Differential) -> bool:
        """Exact zero test of the chosen differential."""
        return Differentials.apply(form, operator).is_zero()
