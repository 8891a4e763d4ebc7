"""Inverse-problem use case: a Lagrangian for a given source form."""
from dataclasses import dataclass
import logging

from ..ports.linear_solver import LinearSolver
from .ansatz_search import AnsatzSearch
from ...domain.entities.form import Form
from ...domain.entities.scalar_expr import ScalarExpr
from ...domain.entities.solve_bounds import SolveBounds
from ...domain.entities.source_form import SourceForm
from ...domain.errors.exceptions import SelfCheckFailedError
from ...domain.services.ansatz_basis import AnsatzBuilder, form_gradings
from ...domain.services.euler_operators import EulerOperators

logger = logging.getLogger(__name__)


@dataclass
class LagrangianSearchResult:
    """Result of a Lagrangian search."""
    lagrangian: ScalarExpr
    jet_order: int
    degree: int
    unknowns: int = 0


class LagrangianSearchUseCase:
    """
    Use case for solving ε_1(L) = Δ by linear ansatz.
    
    Unlike the Tonti construction this needs no Helmholtz precondition: an
    infeasible report at given bounds certifies that no polynomial L exists there.
    """
    
    def __init__(self, solver: LinearSolver):
        """
        Initialize use case.
        
        Args:
            solver: Exact linear solver adapter
        """
        self.search = AnsatzSearch(solver)
    
    def execute(self, source: SourceForm, bounds: SolveBounds) -> LagrangianSearchResult:
        """
        Find L within bounds with euler_lagrange(L) = Δ.
        
        Raises:
            NotFoundWithinBoundsError: If no Lagrangian exists within bounds
        """
        bundle = source.bundle
        target = source.to_form()
        if target.is_zero():
            return LagrangianSearchResult(ScalarExpr.zero(bundle), 0, 0)
        
        volume = Form.volume_word(bundle)
        gradings = form_gradings(target)
        
        def euler_lagrange_form(form: Form) -> Form:
            return EulerOperators.euler_lagrange(form.coefficient(volume)).to_form()
        
        def blocks(order: int, degree: int):
            basis = AnsatzBuilder.basis(bundle, (0, bundle.n), gradings, order, degree)
            return [(euler_lagrange_form, basis)]
        
        # ε_1 of an order-r Lagrangian has order at most 2r
        outcome = self.search.run(
            "find_lagrangian",
            target,
            blocks,
            bounds,
            start_order=(target.jet_order() + 1) // 2,
            start_degree=target.degree(),
        )
        lagrangian = outcome.parts[0].coefficient(volume)
        
        if EulerOperators.euler_lagrange(lagrangian) != source:
            raise SelfCheckFailedError("find_lagrangian: ε_1(L) does not reproduce the source form")
        
        logger.info(f"find_lagrangian: solved at order {outcome.jet_order}, degree {outcome.degree}")
        return LagrangianSearchResult(lagrangian, outcome.jet_order, outcome.degree, outcome.unknowns)
