"""Interior Euler projection, Euler–Lagrange and Helmholtz–Sonin maps."""
from fractions import Fraction

from ..entities.form import Form, Generator
from ..entities.scalar_expr import ScalarExpr
from ..entities.source_form import SourceForm
from ..errors.exceptions import BidegreeError
from .differentials import Differentials
from .exterior_algebra import ExteriorAlgebra
from .scalar_calculus import ScalarCalculus


class EulerOperators:
    """Domain service for τ_k, ε_k and the variational-complex predicates."""

    @staticmethod
    def interior_euler(form: Form, k: int) -> Form:
        """
        Interior Euler operator τ_k on Ω^{k,n}.

        τ_k(φ) = (1/k) Σ_i θ^i ∧ Σ_Λ (-1)^|Λ| d_Λ(ρ_{i,Λ} φ), where ρ_{i,Λ} is the
        interior product with the vector dual to θ^i_Λ.

        Args:
            form: Form of pure bidegree (k, n)
            k: Contact degree, >= 1

        Returns:
            Projection of the form onto E_k along d_H(Ω^{k,n-1})

        Raises:
            BidegreeError: If k < 1 or the form is not of bidegree (k, n)
        """
        bundle = form.bundle
        form = EulerOperators._require_top(form, k, "τ")
        result = Form.zero(bundle)
        for gen in ExteriorAlgebra.vertical_generators(form):
            contracted = ExteriorAlgebra.contract_generator(form, gen)
            integrated = Differentials.total_derivative_form_multi(contracted, gen.dirs)
            if gen.order % 2:
                integrated = -integrated
            theta = Form.theta(bundle, gen.index)
            result = result + ExteriorAlgebra.wedge(theta, integrated)
        return result * Fraction(1, k)

    @staticmethod
    def complement_potential(form: Form, k: int) -> Form:
        """
        σ of bidegree (k, n-1) with d_h(σ) = φ - τ_k(φ), by integration by parts.

        Each θ^i_Λ ∧ P is peeled one direction at a time using
        θ_{Λ+λ} ∧ P = d_λ(θ_Λ ∧ P) - θ_Λ ∧ d_λ P and, on Ω^{k,n},
        d_λ ω = d_h(ι_{dx^λ} ω). The potential has jet order at most twice the
        order of φ.

        Raises:
            BidegreeError: If k < 1 or the form is not of bidegree (k, n)
        """
        bundle = form.bundle
        form = EulerOperators._require_top(form, k, "τ")
        sigma = Form.zero(bundle)
        for gen in ExteriorAlgebra.vertical_generators(form):
            rest = ExteriorAlgebra.contract_generator(form, gen)
            dirs = gen.dirs
            sign = 1
            while dirs:
                lam, dirs = dirs[-1], dirs[:-1]
                shifted = ExteriorAlgebra.wedge(Form.theta(bundle, gen.index, dirs), rest)
                piece = ExteriorAlgebra.contract_generator(shifted, Generator.dx(lam))
                sigma = sigma + piece if sign > 0 else sigma - piece
                rest = Differentials.total_derivative_form(rest, lam)
                sign = -sign
        return sigma * Fraction(1, k)

    @staticmethod
    def _require_top(form: Form, k: int, name: str) -> Form:
        bundle = form.bundle
        if k < 1:
            raise BidegreeError(f"{name}_k needs k >= 1, got {k}")
        form = ExteriorAlgebra.convert_dy_to_contact(form)
        if not form.is_pure(k, bundle.n):
            raise BidegreeError(
                f"{name}_{k} expects bidegree ({k}, {bundle.n}), got {form.bidegrees()}"
            )
        return form

    @staticmethod
    def euler_lagrange(lagrangian: ScalarExpr) -> SourceForm:
        """
        Euler–Lagrange map ε_1 of the Lagrangian L·ω.

        Δ_i = Σ_Λ (-1)^|Λ| d_Λ(∂_i^Λ L) over the jets occurring in L.
        """
        bundle = lagrangian.bundle
        comps = [ScalarExpr.zero(bundle) for _ in range(bundle.m)]
        for var in lagrangian.jet_variables():
            term = ScalarCalculus.total_derivative_multi(
                ScalarCalculus.partial(lagrangian, var), var.dirs
            )
            if var.order % 2:
                term = -term
            comps[var.index - 1] = comps[var.index - 1] + term
        return SourceForm(bundle, tuple(comps))

    @staticmethod
    def euler_lagrange_factored(lagrangian: ScalarExpr) -> SourceForm:
        """ε_1 computed as τ_1(h_1(d(L·ω))), the e_1 = τ_1∘h_1 route."""
        d_lagrangian = Differentials.d_full(Form.top(lagrangian))
        projected = EulerOperators.interior_euler(
            ExteriorAlgebra.contact_projection(d_lagrangian, 1), 1
        )
        return SourceForm.from_form(projected)

    @staticmethod
    def variational_map(form: Form, k: int) -> Form:
        """
        ε_k = τ_k∘d on Ω^{k-1,n}.

        Raises:
            BidegreeError: If the form is not of bidegree (k-1, n)
        """
        bundle = form.bundle
        if k < 1:
            raise BidegreeError(f"ε_k needs k >= 1, got {k}")
        if not form.is_pure(k - 1, bundle.n):
            raise BidegreeError(
                f"ε_{k} expects bidegree ({k - 1}, {bundle.n}), got {form.bidegrees()}"
            )
        differential = ExteriorAlgebra.contact_projection(Differentials.d_full(form), k)
        return EulerOperators.interior_euler(differential, k)

    @staticmethod
    def helmholtz(source: SourceForm) -> Form:
        """Helmholtz–Sonin map ε_2 = τ_2∘d on source forms; zero iff locally variational."""
        return EulerOperators.variational_map(source.to_form(), 2)

    @staticmethod
    def e_map(form: Form, k: int) -> Form:
        """e_k = τ_k∘h_k on forms of total degree n + k."""
        return EulerOperators.interior_euler(ExteriorAlgebra.contact_projection(form, k), k)

    @staticmethod
    def ek_decompose(form: Form, k: int) -> tuple[Form, Form, Form]:
        """
        Split an (n+k)-form along Ω^{n+k} = E_k ⊕ d_H(Ω^{k,n-1}) ⊕ higher-contact part.

        Returns:
            (e_k(φ), h_k(φ) - e_k(φ), Σ_{j>k} h_j(φ))

        Raises:
            BidegreeError: If some term has total degree other than n + k
        """
        bundle = form.bundle
        form = ExteriorAlgebra.convert_dy_to_contact(form)
        for contact, horizontal, _ in ExteriorAlgebra.split_bidegree(form):
            if contact + horizontal != bundle.n + k:
                raise BidegreeError(f"Expected total degree {bundle.n + k}")
        top = ExteriorAlgebra.contact_projection(form, k)
        e_part = EulerOperators.interior_euler(top, k)
        return e_part, top - e_part, form - top

    @staticmethod
    def is_variationally_trivial(lagrangian: ScalarExpr) -> bool:
        return EulerOperators.euler_lagrange(lagrangian).is_zero()

    @staticmethod
    def is_locally_variational(source: SourceForm) -> bool:
        return EulerOperators.helmholtz(source).is_zero()

    @staticmethod
    def order_zero_theta(form: Form) -> bool:
        """True when every term starts with an order-zero θ^i (the E_k shape)."""
        return all(
            word and word[0].kind == Generator.THETA and word[0].order == 0
            for word in form.components
        )
