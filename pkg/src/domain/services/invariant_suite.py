"""Named identities of the variational bicomplex, checked on seeded random inputs."""
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from ..entities.bundle import Bundle
from ..entities.form import Form
from ..entities.run_config import RunConfig
from ..entities.scalar_expr import ScalarExpr
from ..entities.solve_bounds import SolveBounds
from ..entities.source_form import SourceForm
from ..errors.exceptions import NotFoundWithinBoundsError
from .differentials import Differentials
from .euler_operators import EulerOperators
from .exterior_algebra import ExteriorAlgebra
from .homotopy_operators import HomotopyOperators
from .random_forms import RandomForms
from .scalar_calculus import ScalarCalculus


@dataclass(frozen=True)
class SuiteHooks:
    """Solver- and codec-backed operations the pure checks call into."""

    dh_potential: Callable[[Form, SolveBounds], Form]
    ker_dhdv: Callable[[Form, SolveBounds], tuple[Form, Form, Form]]
    find_lagrangian: Callable[[SourceForm, SolveBounds], ScalarExpr]
    round_trip: Callable[[Form, str], Form]


# (config, case index, salt, hooks) -> passed
CheckFn = Callable[[RunConfig, int, int, SuiteHooks], bool]


@dataclass(frozen=True)
class Identity:
    name: str
    module: str
    check: CheckFn


def _pick(options: list, case_index: int):
    return options[case_index % len(options)]


def _bidegrees(config: RunConfig, max_k: int = 2, min_s: int = 0) -> list[tuple[int, int]]:
    return [(k, s) for k in range(max_k + 1) for s in range(min_s, config.n + 1)]


def _form(config: RunConfig, case: int, salt: int, bidegree=None) -> Form:
    if bidegree is None:
        bidegree = _pick(_bidegrees(config), case)
    return RandomForms.gen_random_form(config, bidegree, case, salt)


def _mixed(config: RunConfig, case: int, salt: int) -> Form:
    """Random form of mixed contact degree and fixed horizontal degree."""
    s = case % (config.n + 1)
    out = Form.zero(Bundle(config.n, config.m))
    for k in range(3):
        out = out + RandomForms.gen_random_form(config, (k, s), case, salt * 7 + k)
    return out


# calculus

def _dh_squared(config, case, salt, hooks):
    return Differentials.d_h(Differentials.d_h(_form(config, case, salt))).is_zero()


def _dv_squared(config, case, salt, hooks):
    return Differentials.d_v(Differentials.d_v(_form(config, case, salt))).is_zero()


def _anticommute(config, case, salt, hooks):
    phi = _form(config, case, salt)
    d_h, d_v = Differentials.d_h, Differentials.d_v
    return (d_h(d_v(phi)) + d_v(d_h(phi))).is_zero()


def _d_squared(config, case, salt, hooks):
    return Differentials.d_full(Differentials.d_full(_form(config, case, salt))).is_zero()


def _h0_commutes(config, case, salt, hooks):
    phi = _mixed(config, case, salt)
    left = ExteriorAlgebra.horizontal_projection(Differentials.d_full(phi))
    return left == Differentials.d_h(ExteriorAlgebra.horizontal_projection(phi))


def _hk_projection(config, case, salt, hooks):
    phi = _mixed(config, case, salt)
    k = case % 3
    part = ExteriorAlgebra.contact_projection(phi, k)
    left = ExteriorAlgebra.contact_projection(Differentials.d_full(part), k)
    return left == Differentials.d_h(part)


def _de_rham(config, case, salt, hooks):
    psi = RandomForms.random_dy_form(config, case % (config.n + 2), case, salt)
    converted = ExteriorAlgebra.convert_dy_to_contact(Differentials.d_classic(psi))
    return converted == Differentials.d_full(psi)


def _leibniz(config, case, salt, hooks):
    bidegrees = _bidegrees(config, max_k=1)
    a_deg = _pick(bidegrees, case)
    b_deg = _pick(bidegrees, case // len(bidegrees) + 1)
    alpha = _form(config, case, salt, a_deg)
    beta = _form(config, case, salt + 1000, b_deg)
    d, wedge = Differentials.d_full, ExteriorAlgebra.wedge
    sign = -1 if sum(a_deg) % 2 else 1
    return d(wedge(alpha, beta)) == wedge(d(alpha), beta) + wedge(alpha, d(beta)) * sign


def _total_derivatives_commute(config, case, salt, hooks):
    f = RandomForms.random_scalar(config, case, salt)
    td = ScalarCalculus.total_derivative
    return all(
        td(td(f, lam), mu) == td(td(f, mu), lam)
        for lam in range(1, config.n + 1)
        for mu in range(lam + 1, config.n + 1)
    )


def _constant_kernel(config, case, salt, hooks):
    f = RandomForms.random_scalar(config, case, salt)
    return ScalarCalculus.has_vanishing_total_derivatives(f) == f.is_constant()


# euler

def _divergence_is_trivial(config, case, salt, hooks):
    sigma = _form(config, case, salt, (0, config.n - 1))
    lagrangian = Differentials.d_h(sigma).coefficient(Form.volume_word(Bundle(config.n, config.m)))
    return EulerOperators.is_variationally_trivial(lagrangian)


def _el_factorization(config, case, salt, hooks):
    lagrangian = RandomForms.random_lagrangian(config, case, salt)
    return EulerOperators.euler_lagrange(lagrangian) == EulerOperators.euler_lagrange_factored(lagrangian)


def _tau_idempotent(config, case, salt, hooks):
    k = 1 + case % 2
    image = EulerOperators.interior_euler(_form(config, case, salt, (k, config.n)), k)
    return EulerOperators.interior_euler(image, k) == image


def _tau_kills_exact(config, case, salt, hooks):
    k = 1 + case % 2
    psi = _form(config, case, salt, (k, config.n - 1))
    return EulerOperators.interior_euler(Differentials.d_h(psi), k).is_zero()


def _tau_remainder_exact(config, case, salt, hooks):
    k = 1 + case % 2
    phi = _form(config, case, salt, (k, config.n))
    rest = phi - EulerOperators.interior_euler(phi, k)
    sigma = EulerOperators.complement_potential(phi, k)
    return Differentials.d_h(sigma) == rest and sigma.jet_order() <= 2 * phi.jet_order()


def _helmholtz_of_el(config, case, salt, hooks):
    lagrangian = RandomForms.random_lagrangian(config, case, salt)
    return EulerOperators.helmholtz(EulerOperators.euler_lagrange(lagrangian)).is_zero()


def _eps3_after_eps2(config, case, salt, hooks):
    source = RandomForms.random_source_form(config, case, salt)
    return EulerOperators.variational_map(EulerOperators.helmholtz(source), 3).is_zero()


def _ek_decomposition(config, case, salt, hooks):
    k = 1 + case % 2
    phi = Form.zero(Bundle(config.n, config.m))
    for j in (k, k + 1):
        s = config.n + k - j
        phi = phi + _form(config, case, salt * 7 + j, (j, s))
    e_part, exact, higher = EulerOperators.ek_decompose(phi, k)
    return (
        e_part + exact + higher == phi
        and EulerOperators.interior_euler(e_part, k) == e_part
        and EulerOperators.interior_euler(exact, k).is_zero()
    )


# homotopy

def _vertical_homotopy(config, case, salt, hooks):
    phi = _form(config, case, salt)
    h, d_v = HomotopyOperators.koszul_homotopy, Differentials.d_v
    return d_v(h(phi)) + h(d_v(phi)) == phi - ExteriorAlgebra.zero_section_pullback(phi)


def _full_homotopy(config, case, salt, hooks):
    phi = _form(config, case, salt)
    h, d = HomotopyOperators.koszul_homotopy, Differentials.d_full
    return d(h(phi)) + h(d(phi)) == phi - ExteriorAlgebra.zero_section_pullback(phi)


def _homotopy_integral(config, case, salt, hooks):
    phi = _form(config, case, salt)
    return HomotopyOperators.koszul_homotopy(phi) == HomotopyOperators.koszul_homotopy_integral(phi)


def _dh_round_trip(config, case, salt, hooks):
    k, s = _pick(_bidegrees(config, min_s=1), case)
    phi = Differentials.d_h(_form(config, case, salt, (k, s - 1)))
    if phi.is_zero():
        return True
    sigma = hooks.dh_potential(phi, SolveBounds(config.max_order, config.max_degree))
    return Differentials.d_h(sigma) == phi


def _divergence_order_bound(config, case, salt, hooks):
    sigma = _form(config, case, salt, (0, config.n - 1))
    phi = Differentials.d_h(sigma)
    if phi.is_zero():
        return True
    bounds = SolveBounds(max(phi.jet_order() - 1, 0), config.max_degree + 1)
    potential = hooks.dh_potential(phi, bounds)
    return Differentials.d_h(potential) == phi and potential.jet_order() <= bounds.max_jet_order


def _tonti(config, case, salt, hooks):
    source = EulerOperators.euler_lagrange(RandomForms.random_lagrangian(config, case, salt))
    lagrangian = HomotopyOperators.tonti_lagrangian(source)
    return EulerOperators.euler_lagrange(lagrangian) == source


def _poincare(config, case, salt, hooks):
    phi = Differentials.d_full(_form(config, case, salt))
    phi_x, xi = HomotopyOperators.poincare_decompose(phi)
    return phi == phi_x + Differentials.d_full(xi)


def _horizontal(config, case, salt, hooks):
    phi = Differentials.d_full(_form(config, case, salt))
    phi_x, eta = HomotopyOperators.horizontal_decompose(phi)
    return ExteriorAlgebra.horizontal_projection(phi) == phi_x + Differentials.d_h(eta)


def _ker_dhdv(config, case, salt, hooks):
    k, s = _pick(_bidegrees(config), case)
    bundle = Bundle(config.n, config.m)
    phi = Form.zero(bundle)
    if s >= 1:
        phi = phi + Differentials.d_h(_form(config, case, salt, (k, s - 1)))
    if k >= 1:
        phi = phi + Differentials.d_v(_form(config, case, salt + 1000, (k - 1, s)))
    else:
        phi = phi + ExteriorAlgebra.zero_section_pullback(_form(config, case, salt + 2000, (0, s)))
    sigma, xi, phi_x = hooks.ker_dhdv(phi, SolveBounds(config.max_order, config.max_degree))
    return (
        Differentials.d_h(sigma).is_zero()
        and Differentials.d_v(xi).is_zero()
        and ExteriorAlgebra.zero_section_pullback(phi_x) == phi_x
        and sigma + xi + phi_x == phi
    )


# forms

def _pair(config, case) -> tuple[tuple[int, int], tuple[int, int]]:
    bidegrees = _bidegrees(config, max_k=1)
    return _pick(bidegrees, case), _pick(bidegrees, case // len(bidegrees) + 1)


def _wedge_associative(config, case, salt, hooks):
    a_deg, b_deg = _pair(config, case)
    a = _form(config, case, salt, a_deg)
    b = _form(config, case, salt + 1000, b_deg)
    c = _form(config, case, salt + 2000, _pick(_bidegrees(config, max_k=1), case + 1))
    wedge = ExteriorAlgebra.wedge
    return wedge(wedge(a, b), c) == wedge(a, wedge(b, c))


def _wedge_graded_commutative(config, case, salt, hooks):
    a_deg, b_deg = _pair(config, case)
    a = _form(config, case, salt, a_deg)
    b = _form(config, case, salt + 1000, b_deg)
    sign = -1 if sum(a_deg) * sum(b_deg) % 2 else 1
    return ExteriorAlgebra.wedge(a, b) == ExteriorAlgebra.wedge(b, a) * sign


def _conversion_multiplicative(config, case, salt, hooks):
    a = RandomForms.random_dy_form(config, case % 2, case, salt)
    b = RandomForms.random_dy_form(config, 1 + case % 2, case, salt + 1000)
    convert, wedge = ExteriorAlgebra.convert_dy_to_contact, ExteriorAlgebra.wedge
    return convert(wedge(a, b)) == wedge(convert(a), convert(b))


def _contraction_derivation(config, case, salt, hooks):
    a_deg, b_deg = _pair(config, case)
    a = _form(config, case, salt, a_deg)
    b = _form(config, case, salt + 1000, b_deg)
    iota, wedge = ExteriorAlgebra.euler_contraction, ExteriorAlgebra.wedge
    sign = -1 if sum(a_deg) % 2 else 1
    return (
        iota(wedge(a, b)) == wedge(iota(a), b) + wedge(a, iota(b)) * sign
        and iota(iota(_mixed(config, case, salt))).is_zero()
    )


def _projections(config, case, salt, hooks):
    phi = _mixed(config, case, salt)
    project = ExteriorAlgebra.contact_projection
    parts = [part for _, _, part in ExteriorAlgebra.split_bidegree(phi)]
    total = Form.zero(Bundle(config.n, config.m))
    for part in parts:
        total = total + part
    return total == phi and all(
        project(project(phi, k), j) == (project(phi, k) if j == k else Form.zero(phi.bundle))
        for k in range(3)
        for j in range(3)
    )


# cli

def _round_trip_text(config, case, salt, hooks):
    phi = _form(config, case, salt)
    return hooks.round_trip(phi, "text") == phi


def _round_trip_json(config, case, salt, hooks):
    phi = _form(config, case, salt)
    return hooks.round_trip(phi, "json") == phi


def _fixed_cases(config, case, salt, hooks):
    """Closed-form cases on n = m = 1; evaluated on the first case only."""
    if case:
        return True
    bundle = Bundle(1, 1)
    u_1, u_11 = ScalarExpr.jet(bundle, 1, (1,)), ScalarExpr.jet(bundle, 1, (1, 1))
    if EulerOperators.euler_lagrange(u_1 * u_1 * Fraction(1, 2)) != SourceForm(bundle, (-u_11,)):
        return False
    if not EulerOperators.is_locally_variational(SourceForm(bundle, (u_11,))):
        return False
    non_variational = SourceForm(bundle, (u_1,))
    if EulerOperators.is_locally_variational(non_variational):
        return False
    try:
        hooks.find_lagrangian(non_variational, SolveBounds(2, 4, deepening=False))
    except NotFoundWithinBoundsError:
        return True
    return False


class InvariantSuite:
    """Domain service listing every identity the self-check runs."""

    @staticmethod
    def identities() -> list[Identity]:
        return [
            Identity("d_h∘d_h = 0", "calculus", _dh_squared),
            Identity("d_v∘d_v = 0", "calculus", _dv_squared),
            Identity("d_h∘d_v + d_v∘d_h = 0", "calculus", _anticommute),
            Identity("d∘d = 0", "calculus", _d_squared),
            Identity("h_0∘d = d_h∘h_0", "calculus", _h0_commutes),
            Identity("h_k∘d∘h_k = d_h∘h_k", "calculus", _hk_projection),
            Identity("contact(d_classic) = d_full(contact)", "calculus", _de_rham),
            Identity("graded Leibniz rule for d", "calculus", _leibniz),
            Identity("total derivatives commute", "calculus", _total_derivatives_commute),
            Identity("d_h f = 0 iff f constant", "calculus", _constant_kernel),
            Identity("ε_1(d_h σ) = 0", "euler", _divergence_is_trivial),
            Identity("ε_1 = τ_1∘h_1∘d", "euler", _el_factorization),
            Identity("τ_k∘τ_k = τ_k", "euler", _tau_idempotent),
            Identity("τ_k∘d_h = 0", "euler", _tau_kills_exact),
            Identity("φ - τ_k φ is d_h-exact", "euler", _tau_remainder_exact),
            Identity("ε_2∘ε_1 = 0", "euler", _helmholtz_of_el),
            Identity("ε_3∘ε_2 = 0", "euler", _eps3_after_eps2),
            Identity("e_k decomposition", "euler", _ek_decomposition),
            Identity("d_v H + H d_v = 1 - pullback", "homotopy", _vertical_homotopy),
            Identity("d H + H d = 1 - pullback", "homotopy", _full_homotopy),
            Identity("homotopy closed form = integral", "homotopy", _homotopy_integral),
            Identity("dh_potential round trip", "homotopy", _dh_round_trip),
            Identity("divergence potential within order r-1", "homotopy", _divergence_order_bound),
            Identity("ε_1(tonti(Δ)) = Δ", "homotopy", _tonti),
            Identity("φ = φ_X + dξ", "homotopy", _poincare),
            Identity("h_0 φ = φ_X + d_h η", "homotopy", _horizontal),
            Identity("ker d_h d_v decomposition", "homotopy", _ker_dhdv),
            Identity("parse(print(φ)) = φ (text)", "cli", _round_trip_text),
            Identity("parse(print(φ)) = φ (json)", "cli", _round_trip_json),
            Identity("fixed Euler–Lagrange and Helmholtz cases", "euler", _fixed_cases),
            Identity("wedge is associative", "forms", _wedge_associative),
            Identity("wedge is graded-commutative", "forms", _wedge_graded_commutative),
            Identity("dy conversion is multiplicative", "forms", _conversion_multiplicative),
            Identity("ȳ⌋ is a graded derivation, ȳ⌋ȳ⌋ = 0", "forms", _contraction_derivation),
            Identity("h_j∘h_k = δ_jk h_k", "forms", _projections),
        ]
