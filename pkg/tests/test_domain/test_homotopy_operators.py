"""Test the fibre-scaling homotopy, De Rham decompositions and Tonti Lagrangians."""
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from src.domain.entities.form import Form
from src.domain.entities.run_config import RunConfig
from src.domain.entities.source_form import SourceForm
from src.domain.errors.exceptions import BidegreeError, PreconditionViolationError
from src.domain.services.differentials import Differentials
from src.domain.services.euler_operators import EulerOperators
from src.domain.services.exterior_algebra import ExteriorAlgebra
from src.domain.services.homotopy_operators import HomotopyOperators
from src.domain.services.random_forms import RandomForms
from tests.conftest import dx, th, u, x

wedge = ExteriorAlgebra.wedge
HALF = Fraction(1, 2)


def test_koszul_of_theta(b11):
    assert HomotopyOperators.koszul_homotopy(th(b11) * u(b11)) == Form.scalar(u(b11) ** 2 * HALF)


def test_koszul_of_two_thetas(b11):
    form = wedge(th(b11), th(b11, 1))
    expected = (th(b11, 1) * u(b11) - th(b11) * u(b11, 1)) * HALF
    assert HomotopyOperators.koszul_homotopy(form) == expected


def test_koszul_of_horizontal_form_is_zero(b11):
    assert HomotopyOperators.koszul_homotopy(dx(b11) * (x(b11) ** 2 + u(b11))).is_zero()


def test_integral_form_matches_closed_form(b11):
    form = wedge(th(b11), th(b11, 1)) * (u(b11) ** 2 + x(b11)) + th(b11, 1) * u(b11)
    assert HomotopyOperators.koszul_homotopy_integral(form) == HomotopyOperators.koszul_homotopy(form)


def test_dv_potential_of_closed_form(b11):
    sigma, phi_x = HomotopyOperators.dv_potential(th(b11) * (u(b11) * 2 + 1))
    assert sigma == Form.scalar(u(b11) ** 2 + u(b11))
    assert phi_x.is_zero()


def test_dv_potential_keeps_base_part(b11):
    sigma, phi_x = HomotopyOperators.dv_potential(dx(b11) * x(b11))
    assert sigma.is_zero()
    assert phi_x == dx(b11) * x(b11)


def test_dv_potential_requires_closed_form(b11):
    with pytest.raises(PreconditionViolationError):
        HomotopyOperators.dv_potential(th(b11) * u(b11, 1))


def test_poincare_decompose(b11):
    form = th(b11) + dx(b11) * u(b11, 1)
    phi_x, xi = HomotopyOperators.poincare_decompose(form)
    assert phi_x.is_zero()
    assert xi == Form.scalar(u(b11))


def test_poincare_decompose_of_base_form(b21):
    phi_x, xi = HomotopyOperators.poincare_decompose(dx(b21, 1))
    assert phi_x == dx(b21, 1)
    assert xi.is_zero()


def test_poincare_decompose_of_zero(b11):
    phi_x, xi = HomotopyOperators.poincare_decompose(Form.zero(b11))
    assert phi_x.is_zero() and xi.is_zero()


def test_poincare_decompose_requires_closed_form(b11):
    with pytest.raises(PreconditionViolationError):
        HomotopyOperators.poincare_decompose(th(b11))


def test_horizontal_decompose(b11):
    form = th(b11) + dx(b11) * u(b11, 1)
    phi_x, eta = HomotopyOperators.horizontal_decompose(form)
    assert phi_x.is_zero()
    assert Differentials.d_h(eta) == ExteriorAlgebra.horizontal_projection(form)


def test_tonti_lagrangian_of_second_derivative(b11):
    lagrangian = HomotopyOperators.tonti_lagrangian(SourceForm(b11, (u(b11, 1, 1),)))
    assert lagrangian == u(b11) * u(b11, 1, 1) * HALF


def test_tonti_lagrangian_of_linear_source(b11):
    lagrangian = HomotopyOperators.tonti_lagrangian(SourceForm(b11, (u(b11) + x(b11),)))
    assert lagrangian == u(b11) ** 2 * HALF + x(b11) * u(b11)


def test_tonti_lagrangian_of_zero(b11):
    assert HomotopyOperators.tonti_lagrangian(SourceForm.zero(b11)).is_zero()


def test_tonti_rejects_non_variational_source(b11):
    with pytest.raises(PreconditionViolationError, match="Helmholtz"):
        HomotopyOperators.tonti_lagrangian(SourceForm(b11, (u(b11, 1),)))


def test_dh_exact_candidate_checks(b11, b21):
    assert HomotopyOperators.require_dh_exact_candidate(dx(b11) * u(b11, 1)) == (0, 1)
    with pytest.raises(PreconditionViolationError):
        HomotopyOperators.require_dh_exact_candidate(dx(b11) * u(b11))
    with pytest.raises(PreconditionViolationError):
        HomotopyOperators.require_dh_exact_candidate(dx(b21, 1) * u(b21))
    with pytest.raises(PreconditionViolationError):
        HomotopyOperators.require_dh_exact_candidate(Form.scalar(u(b11)))
    with pytest.raises(BidegreeError):
        HomotopyOperators.require_dh_exact_candidate(th(b11) + dx(b11) * u(b11, 1))


@settings(deadline=None, max_examples=10)
@given(case=st.integers(0, 200), k=st.integers(0, 2), s=st.integers(0, 1))
def test_vertical_homotopy_formula(case, k, s):
    config = RunConfig(n=1, m=1, seed=11, max_order=2, max_degree=2, max_terms=3)
    form = RandomForms.gen_random_form(config, (k, s), case)
    h = HomotopyOperators.koszul_homotopy
    lhs = Differentials.d_v(h(form)) + h(Differentials.d_v(form))
    assert lhs == form - ExteriorAlgebra.zero_section_pullback(form)


@settings(deadline=None, max_examples=10)
@given(case=st.integers(0, 200))
def test_tonti_inverts_euler_lagrange(case):
    config = RunConfig(n=1, m=1, seed=13, max_order=2, max_degree=2, max_terms=3)
    source = EulerOperators.euler_lagrange(RandomForms.random_lagrangian(config, case))
    lagrangian = HomotopyOperators.tonti_lagrangian(source)
    assert EulerOperators.euler_lagrange(lagrangian) == source
