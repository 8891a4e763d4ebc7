"""Shared fixtures and small builders."""
import pytest

from src.domain.entities.bundle import Bundle
from src.domain.entities.form import Form
from src.domain.entities.scalar_expr import ScalarExpr
from src.infrastructure.solvers.sympy_sparse_solver import SympySparseSolver
from src.infrastructure.syntax.pyparsing_form_codec import PyparsingFormCodec


@pytest.fixture
def b11():
    return Bundle(1, 1)


@pytest.fixture
def b21():
    return Bundle(2, 1)


@pytest.fixture
def codec():
    return PyparsingFormCodec()


@pytest.fixture
def solver():
    return SympySparseSolver()


def u(bundle, *dirs, i=1):
    """Jet coordinate y^i_Λ as a scalar."""
    return ScalarExpr.jet(bundle, i, dirs)


def x(bundle, lam=1):
    return ScalarExpr.base(bundle, lam)


def th(bundle, *dirs, i=1):
    return Form.theta(bundle, i, dirs)


def dx(bundle, lam=1):
    return Form.dx(bundle, lam)
