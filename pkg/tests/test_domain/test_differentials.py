"""Test d_h, d_v, d and the classical exterior derivative."""
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from src.domain.entities.form import Form
from src.domain.entities.run_config import RunConfig
from src.domain.errors.exceptions import PreconditionViolationError
from src.domain.services.differentials import Differential, Differentials
from src.domain.services.exterior_algebra import ExteriorAlgebra
from src.domain.services.random_forms import RandomForms
from tests.conftest import dx, th, u, x

wedge = ExteriorAlgebra.wedge


def test_horizontal_differential_of_scalar(b11):
    assert Differentials.d_h(Form.scalar(u(b11))) == dx(b11) * u(b11, 1)


def test_vertical_differential_of_scalar(b11):
    assert Differentials.d_v(Form.scalar(u(b11) ** 2)) == th(b11) * (u(b11) * 2)


def test_d_of_theta_prolongs(b11):
    """dθ = dx ∧ θ_1 = -θ_1 ∧ dx."""
    assert Differentials.d_full(th(b11)) == -wedge(th(b11, 1), dx(b11))


def test_classical_d_agrees_with_bicomplex_d(b11):
    form = dx(b11) * u(b11)
    classic = ExteriorAlgebra.convert_dy_to_contact(Differentials.d_classic(form))
    assert classic == Differentials.d_full(form)
    assert classic == wedge(th(b11), dx(b11))


def test_classical_d_rejects_contact_forms(b11):
    with pytest.raises(PreconditionViolationError):
        Differentials.d_classic(th(b11))


def test_dy_inputs_are_converted(b11):
    assert Differentials.d_full(Form.dy(b11, 1)).is_zero()


def test_is_closed(b21):
    assert Differentials.is_closed(dx(b21, 1) * x(b21, 1), Differential.D_H)
    assert not Differentials.is_closed(dx(b21, 1) * u(b21), "d_h")


def test_total_derivative_form_is_a_derivation(b11):
    form = th(b11) * u(b11)
    expected = th(b11) * u(b11, 1) + th(b11, 1) * u(b11)
    assert Differentials.total_derivative_form(form, 1) == expected


def _config(n):
    return RunConfig(n=n, m=1, seed=7, max_order=2, max_degree=2, max_terms=3)


@settings(deadline=None, max_examples=15)
@given(case=st.integers(0, 200), n=st.integers(1, 2), k=st.integers(0, 2), s=st.integers(0, 2))
def test_differentials_square_to_zero(case, n, k, s):
    config = _config(n)
    s = min(s, n)
    form = RandomForms.gen_random_form(config, (k, s), case)
    assert Differentials.d_h(Differentials.d_h(form)).is_zero()
    assert Differentials.d_v(Differentials.d_v(form)).is_zero()
    assert (Differentials.d_h(Differentials.d_v(form)) + Differentials.d_v(Differentials.d_h(form))).is_zero()


@settings(deadline=None, max_examples=15)
@given(case=st.integers(0, 200), degree=st.integers(0, 2))
def test_classical_d_matches_after_conversion(case, degree):
    config = _config(2)
    form = RandomForms.random_dy_form(config, degree, case)
    classic = ExteriorAlgebra.convert_dy_to_contact(Differentials.d_classic(form))
    assert classic == Differentials.d_full(form)
