"""Command view model."""
import json
from typing import Union

from src.application.ports.form_codec import FormCodec
from src.application.ports.linear_solver import LinearSolver
from src.application.use_cases.dh_potential_use_case import DhPotentialUseCase
from src.application.use_cases.ker_dhdv_decompose_use_case import KerDhDvDecomposeUseCase
from src.application.use_cases.lagrangian_search_use_case import LagrangianSearchUseCase
from src.application.use_cases.self_check_use_case import SelfCheckResult, SelfCheckUseCase
from src.domain.entities.bundle import Bundle
from src.domain.entities.form import Form
from src.domain.entities.run_config import OutputFormat, RunConfig
from src.domain.entities.scalar_expr import ScalarExpr
from src.domain.entities.solve_bounds import SolveBounds
from src.domain.services.differentials import Differentials
from src.domain.services.euler_operators import EulerOperators
from src.domain.services.exterior_algebra import ExteriorAlgebra
from src.domain.services.homotopy_operators import HomotopyOperators

Value = Union[Form, ScalarExpr, str]


class CommandViewModel:
    """View model for the command-line surface: parses inputs, runs operations, renders results."""

    def __init__(
        self,
        codec: FormCodec,
        solver: LinearSolver,
        bundle: Bundle,
        fmt: OutputFormat = "text"
    ):
        """
        Initialize view model.

        Args:
            codec: Form codec
            solver: Exact linear solver
            bundle: Bundle all inputs refer to
            fmt: Output format
        """
        self.codec = codec
        self.bundle = bundle
        self.fmt = fmt
        self.dh_potential_use_case = DhPotentialUseCase(solver)
        self.lagrangian_use_case = LagrangianSearchUseCase(solver)
        self.kerdhdv_use_case = KerDhDvDecomposeUseCase(solver)
        self.self_check_use_case = SelfCheckUseCase(solver, codec)

    # Rendering

    def _render_value(self, value: Value, as_json: bool):
        if isinstance(value, Form):
            text = self.codec.print_form(value, self.fmt)
        elif isinstance(value, ScalarExpr):
            text = self.codec.print_scalar(value, self.fmt)
        else:
            return value
        return json.loads(text) if as_json else text

    def render(self, *items: tuple[str, Value]) -> str:
        """
        Render labelled results.

        A single item prints bare; several print as "label: value" lines, or as one
        JSON object keyed by label.
        """
        if self.fmt == "json":
            if len(items) == 1:
                value = self._render_value(items[0][1], as_json=True)
                return value if isinstance(value, str) else json.dumps(value)
            return json.dumps({label: self._render_value(v, as_json=True) for label, v in items})
        if len(items) == 1:
            return self._render_value(items[0][1], as_json=False)
        return "\n".join(f"{label}: {self._render_value(v, as_json=False)}" for label, v in items)

    def _form(self, src: str) -> Form:
        return self.codec.parse_form(src, self.bundle)

    def _scalar(self, src: str) -> ScalarExpr:
        return self.codec.parse_scalar(src, self.bundle)

    # Calculus

    def differential(self, src: str, which: str) -> str:
        return self.render(("result", Differentials.apply(self._form(src), which)))

    def contact_part(self, src: str, k: int) -> str:
        return self.render(("result", ExteriorAlgebra.contact_projection(self._form(src), k)))

    def split(self, src: str) -> str:
        parts = ExteriorAlgebra.split_bidegree(self._form(src))
        if not parts:
            return self.render(("result", Form.zero(self.bundle)))
        return self.render(*((f"({k},{s})", part) for k, s, part in parts))

    # Euler

    def euler_lagrange(self, src: str) -> str:
        return self.render(("result", EulerOperators.euler_lagrange(self._scalar(src)).to_form()))

    def helmholtz(self, src: str) -> str:
        source = self.codec.parse_source_form(src, self.bundle)
        return self.render(("result", EulerOperators.helmholtz(source)))

    def is_trivial(self, src: str) -> str:
        return _flag(EulerOperators.is_variationally_trivial(self._scalar(src)))

    def is_variational(self, src: str) -> str:
        source = self.codec.parse_source_form(src, self.bundle)
        return _flag(EulerOperators.is_locally_variational(source))

    def interior_euler(self, src: str, k: int) -> str:
        return self.render(("result", EulerOperators.interior_euler(self._form(src), k)))

    def variational_map(self, src: str, k: int) -> str:
        return self.render(("result", EulerOperators.variational_map(self._form(src), k)))

    def ek_decompose(self, src: str, k: int) -> str:
        e_part, exact, higher = EulerOperators.ek_decompose(self._form(src), k)
        return self.render(("e", e_part), ("exact", exact), ("higher", higher))

    # Homotopy

    def potential(self, src: str, target: str, bounds: SolveBounds) -> str:
        form = self._form(src)
        if target == "dh":
            return self.render(("sigma", self.dh_potential_use_case.execute(form, bounds).sigma))
        if target == "dv":
            sigma, phi_x = HomotopyOperators.dv_potential(form)
            return self.render(("sigma", sigma), ("phi_x", phi_x))
        phi_x, xi = HomotopyOperators.poincare_decompose(form)
        _, eta = HomotopyOperators.horizontal_decompose(form)
        return self.render(("phi_x", phi_x), ("xi", xi), ("eta", eta))

    def tonti(self, src: str) -> str:
        source = self.codec.parse_source_form(src, self.bundle)
        return self.render(("result", HomotopyOperators.tonti_lagrangian(source)))

    def find_lagrangian(self, src: str, bounds: SolveBounds) -> str:
        source = self.codec.parse_source_form(src, self.bundle)
        return self.render(("result", self.lagrangian_use_case.execute(source, bounds).lagrangian))

    def decompose_kerdhdv(self, src: str, bounds: SolveBounds) -> str:
        result = self.kerdhdv_use_case.execute(self._form(src), bounds)
        if result.stronger_than_lemma:
            note = "sigma = d_h(alpha), xi = d_v(beta)"
        else:
            note = "no, sigma has a d_h-closed top-degree part"
        return self.render(
            ("sigma", result.sigma),
            ("xi", result.xi),
            ("phi_x", result.phi_x),
            ("alpha", result.alpha),
            ("beta", result.beta),
            ("stronger_than_lemma", note),
        )

    # Self-check

    def self_check(self, config: RunConfig) -> tuple[bool, str]:
        """Run the suite; returns (passed, transcript)."""
        result = self.self_check_use_case.execute(config)
        if self.fmt == "json":
            return result.passed, json.dumps({
                "seed": config.seed,
                "cases": config.cases,
                "passed": result.passed,
                "identities": [
                    {
                        "name": t.name,
                        "module": t.module,
                        "cases": t.cases,
                        "passed": t.passed,
                        "failed": t.failed,
                        "first_failure": t.first_failure,
                    }
                    for t in result.tallies
                ],
            })
        return result.passed, format_table(result)


def _flag(value: bool) -> str:
    return "true" if value else "false"


def format_table(result: SelfCheckResult) -> str:
    """Pass/fail table; contains no timings so transcripts are reproducible."""
    config = result.config
    width = max(len(t.name) for t in result.tallies)
    lines = [
        f"selfcheck seed={config.seed} cases={config.cases} n={config.n} m={config.m} "
        f"max_order={config.max_order} max_degree={config.max_degree} max_terms={config.max_terms}",
        f"{'identity':<{width}}  {'module':<8}  {'passed':>6}  {'failed':>6}  status",
    ]
    for t in result.tallies:
        status = "PASS" if t.failed == 0 else "FAIL"
        lines.append(f"{t.name:<{width}}  {t.module:<8}  {t.passed:>6}  {t.failed:>6}  {status}")
    for t in result.tallies:
        if t.first_failure:
            lines.append(f"first failure of {t.name}: {t.first_failure}")
    total = sum(t.cases for t in result.tallies)
    verdict = "PASS" if result.passed else "FAIL"
    lines.append(f"{verdict}: {len(result.tallies)} identities, {total} cases, {result.failed} failed")
    return "\n".join(lines)
