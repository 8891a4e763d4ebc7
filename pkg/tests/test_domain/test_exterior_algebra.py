"""Test form normalization and exterior algebra operations."""
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from src.domain.entities.bundle import Bundle
from src.domain.entities.form import Form, Generator, sort_word
from src.domain.entities.run_config import RunConfig
from src.domain.entities.source_form import SourceForm
from src.domain.errors.exceptions import BidegreeError, BundleMismatchError
from src.domain.services.exterior_algebra import ExteriorAlgebra
from src.domain.services.random_forms import RandomForms
from tests.conftest import dx, th, u, x

wedge = ExteriorAlgebra.wedge


def test_repeated_generator_vanishes(b11):
    assert wedge(th(b11), th(b11)).is_zero()
    assert wedge(dx(b11), dx(b11)).is_zero()


def test_wedge_is_graded_commutative(b11):
    assert wedge(dx(b11), th(b11)) == -wedge(th(b11), dx(b11))
    assert wedge(th(b11, 1), th(b11)) == -wedge(th(b11), th(b11, 1))


def test_canonical_order_puts_theta_before_dx(b11):
    form = wedge(dx(b11), th(b11))
    (word,) = form.components
    assert word == (Generator.theta(1), Generator.dx(1))


def test_sort_word_sign_and_repeats():
    a, b, c = Generator.theta(1), Generator.theta(1, (1,)), Generator.dx(1)
    assert sort_word([c, b, a]) == (-1, (a, b, c))
    assert sort_word([b, c, a]) == (1, (a, b, c))
    assert sort_word([a, c, a]) is None


def test_scalars_commute_with_generators(b11):
    assert wedge(Form.scalar(u(b11)), th(b11)) == wedge(th(b11), Form.scalar(u(b11)))


def test_dy_converts_to_contact_basis(b11):
    converted = ExteriorAlgebra.convert_dy_to_contact(Form.dy(b11, 1))
    assert converted == th(b11) + dx(b11) * u(b11, 1)


def test_dy_conversion_in_two_dimensions(b21):
    converted = ExteriorAlgebra.convert_dy_to_contact(Form.dy(b21, 1, (1,)))
    expected = th(b21, 1) + dx(b21, 1) * u(b21, 1, 1) + dx(b21, 2) * u(b21, 1, 2)
    assert converted == expected


def test_split_bidegree_orders_by_contact_degree(b11):
    form = th(b11) + dx(b11) * u(b11, 1)
    assert ExteriorAlgebra.split_bidegree(form) == [
        (0, 1, dx(b11) * u(b11, 1)),
        (1, 0, th(b11)),
    ]


def test_contact_projection(b11):
    form = th(b11) + dx(b11) * u(b11, 1)
    assert ExteriorAlgebra.contact_projection(form, 1) == th(b11)
    assert ExteriorAlgebra.contact_projection(form, 2).is_zero()
    assert ExteriorAlgebra.horizontal_projection(form) == dx(b11) * u(b11, 1)


def test_contact_projection_rejects_negative_degree(b11):
    with pytest.raises(BidegreeError):
        ExteriorAlgebra.contact_projection(th(b11), -1)


def test_zero_section_pullback_drops_contact_and_fibre_terms(b11):
    form = dx(b11) * (x(b11) + u(b11)) + th(b11) * x(b11)
    assert ExteriorAlgebra.zero_section_pullback(form) == dx(b11) * x(b11)


def test_euler_contraction_alternates_signs(b11):
    form = wedge(th(b11), th(b11, 1))
    expected = th(b11, 1) * u(b11) - th(b11) * u(b11, 1)
    assert ExteriorAlgebra.euler_contraction(form) == expected


def test_euler_contraction_ignores_dx(b11):
    assert ExteriorAlgebra.euler_contraction(dx(b11) * u(b11)).is_zero()


def test_bidegree_of_mixed_form_raises(b11):
    with pytest.raises(BidegreeError):
        (th(b11) + dx(b11)).bidegree()
    assert (th(b11) * u(b11)).bidegree() == (1, 0)


def test_jet_order_counts_contact_generators(b11):
    assert th(b11, 1, 1).jet_order() == 2
    assert (dx(b11) * u(b11, 1)).jet_order() == 1


def test_forms_over_different_bundles_do_not_mix(b11, b21):
    with pytest.raises(BundleMismatchError):
        th(b11) + th(b21)


def test_source_form_round_trip(b11):
    source = SourceForm(b11, (u(b11, 1, 1),))
    assert SourceForm.from_form(source.to_form()) == source


def test_source_form_rejects_prolonged_theta(b11):
    with pytest.raises(BidegreeError):
        SourceForm.from_form(wedge(th(b11, 1), dx(b11)))


def test_source_form_component_count():
    bundle = Bundle(1, 2)
    with pytest.raises(ValueError):
        SourceForm(bundle, (u(bundle),))


def _config(n, m):
    return RunConfig(n=n, m=m, seed=13, max_order=2, max_degree=2, max_terms=3)


bidegrees = st.tuples(st.integers(0, 2), st.integers(0, 2))
bundles = st.sampled_from([(1, 1), (2, 1), (2, 2)])


def _random(config, bidegree, case, salt):
    k, s = bidegree
    return RandomForms.gen_random_form(config, (k, min(s, config.n)), case, salt)


@settings(deadline=None, max_examples=25)
@given(case=st.integers(0, 500), dims=bundles, a_deg=bidegrees, b_deg=bidegrees, c_deg=bidegrees)
def test_wedge_is_associative_and_graded_commutative(case, dims, a_deg, b_deg, c_deg):
    config = _config(*dims)
    a = _random(config, a_deg, case, 1)
    b = _random(config, b_deg, case, 2)
    c = _random(config, c_deg, case, 3)
    assert wedge(wedge(a, b), c) == wedge(a, wedge(b, c))
    degree_a = a_deg[0] + min(a_deg[1], config.n)
    degree_b = b_deg[0] + min(b_deg[1], config.n)
    sign = -1 if degree_a * degree_b % 2 else 1
    assert wedge(a, b) == wedge(b, a) * sign


@settings(deadline=None, max_examples=25)
@given(case=st.integers(0, 500), dims=bundles, degrees=st.tuples(st.integers(0, 2), st.integers(0, 2)))
def test_dy_conversion_is_multiplicative(case, dims, degrees):
    config = _config(*dims)
    a = RandomForms.random_dy_form(config, degrees[0], case, 1)
    b = RandomForms.random_dy_form(config, degrees[1], case, 2)
    convert = ExteriorAlgebra.convert_dy_to_contact
    assert convert(wedge(a, b)) == wedge(convert(a), convert(b))


@settings(deadline=None, max_examples=25)
@given(case=st.integers(0, 500), dims=bundles, a_deg=bidegrees, b_deg=bidegrees)
def test_euler_contraction_is_a_graded_derivation(case, dims, a_deg, b_deg):
    config = _config(*dims)
    a = _random(config, a_deg, case, 1)
    b = _random(config, b_deg, case, 2)
    iota = ExteriorAlgebra.euler_contraction
    sign = -1 if (a_deg[0] + min(a_deg[1], config.n)) % 2 else 1
    assert iota(wedge(a, b)) == wedge(iota(a), b) + wedge(a, iota(b)) * sign
    assert iota(iota(wedge(a, b))).is_zero()


@settings(deadline=None, max_examples=25)
@given(case=st.integers(0, 500), dims=bundles, s=st.integers(0, 2))
def test_contact_projections_are_orthogonal_idempotents(case, dims, s):
    config = _config(*dims)
    form = Form.zero(RandomForms.bundle(config))
    for k in range(3):
        form = form + _random(config, (k, s), case, k)
    total = Form.zero(form.bundle)
    for _, _, part in ExteriorAlgebra.split_bidegree(form):
        total = total + part
    assert total == form
    project = ExteriorAlgebra.contact_projection
    for k in range(3):
        part = project(form, k)
        assert project(part, k) == part
        for j in range(3):
            if j != k:
                assert project(part, j).is_zero()
