"""Test the Lagrangian search use case."""
import pytest

from src.application.use_cases.lagrangian_search_use_case import LagrangianSearchUseCase
from src.domain.entities.bundle import Bundle
from src.domain.entities.solve_bounds import SolveBounds
from src.domain.entities.source_form import SourceForm
from src.domain.errors.exceptions import NotFoundWithinBoundsError
from src.domain.services.euler_operators import EulerOperators
from tests.conftest import u, x


@pytest.fixture
def use_case(solver):
    return LagrangianSearchUseCase(solver)


def test_finds_lagrangian_of_wave_operator(use_case, b11):
    source = SourceForm(b11, (u(b11, 1, 1),))
    result = use_case.execute(source, SolveBounds(3, 4))
    assert EulerOperators.euler_lagrange(result.lagrangian) == source
    assert result.jet_order == 1


def test_finds_lagrangian_with_base_dependence(use_case, b11):
    source = SourceForm(b11, (u(b11) * x(b11) + 1,))
    result = use_case.execute(source, SolveBounds(2, 3))
    assert EulerOperators.euler_lagrange(result.lagrangian) == source


def test_finds_lagrangian_for_two_fields(use_case):
    bundle = Bundle(1, 2)
    source = SourceForm(bundle, (u(bundle, i=2), u(bundle, i=1)))
    result = use_case.execute(source, SolveBounds(1, 2))
    assert EulerOperators.euler_lagrange(result.lagrangian) == source


def test_zero_source(use_case, b11):
    assert use_case.execute(SourceForm.zero(b11), SolveBounds(1, 1)).lagrangian.is_zero()


def test_non_variational_source_is_infeasible(use_case, b11):
    source = SourceForm(b11, (u(b11, 1),))
    bounds = SolveBounds(2, 4, deepening=False)
    with pytest.raises(NotFoundWithinBoundsError) as info:
        use_case.execute(source, bounds)
    assert info.value.bounds == bounds
    assert "max_jet_order=2" in info.value.report()
