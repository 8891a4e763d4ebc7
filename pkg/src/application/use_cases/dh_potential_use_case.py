"""d_H-potential use case."""
from dataclasses import dataclass
import logging

from ..ports.linear_solver import LinearSolver
from .ansatz_search import AnsatzSearch
from ...domain.entities.form import Form
from ...domain.entities.solve_bounds import SolveBounds
from ...domain.errors.exceptions import SelfCheckFailedError
from ...domain.services.ansatz_basis import AnsatzBuilder, form_gradings
from ...domain.services.differentials import Differentials
from ...domain.services.exterior_algebra import ExteriorAlgebra
from ...domain.services.homotopy_operators import HomotopyOperators

logger = logging.getLogger(__name__)


@dataclass
class DhPotentialResult:
    """Result of a d_H-potential search."""
    sigma: Form
    jet_order: int  # bound at which the solver succeeded
    degree: int
    unknowns: int = 0
    solve_time_ms: float = 0.0


class DhPotentialUseCase:
    """Use case for solving d_h(σ) = φ within bounds."""
    
    def __init__(self, solver: LinearSolver):
        """
        Initialize use case.
        
        Args:
            solver: Exact linear solver adapter
        """
        self.search = AnsatzSearch(solver)
    
    def execute(self, form: Form, bounds: SolveBounds) -> DhPotentialResult:
        """
        Find σ of bidegree (k, s-1) with d_h(σ) = φ.
        
        Deepening starts at jet order max(jet_order(φ) - 1, 0) and degree deg(φ).
        
        Args:
            form: Form of pure bidegree (k, s), s >= 1
            bounds: Final search bounds
            
        Returns:
            DhPotentialResult
            
        Raises:
            BidegreeError: If the form is not of pure bidegree
            PreconditionViolationError: If the form cannot be d_h-exact
            NotFoundWithinBoundsError: If no potential exists within bounds
        """
        form = ExteriorAlgebra.convert_dy_to_contact(form)
        if form.is_zero():
            return DhPotentialResult(form, 0, 0)
        
        k, s = HomotopyOperators.require_dh_exact_candidate(form)
        bundle = form.bundle
        gradings = form_gradings(form)
        
        def blocks(order: int, degree: int):
            basis = AnsatzBuilder.basis(bundle, (k, s - 1), gradings, order, degree)
            return [(Differentials.d_h, basis)]
        
        outcome = self.search.run(
            "dh_potential",
            form,
            blocks,
            bounds,
            start_order=max(form.jet_order() - 1, 0),
            start_degree=form.degree(),
        )
        sigma = outcome.parts[0]
        
        if Differentials.d_h(sigma) != form:
            raise SelfCheckFailedError("dh_potential: d_h(σ) does not reproduce the input")
        
        logger.info(
            f"dh_potential: solved at order {outcome.jet_order}, degree {outcome.degree} "
            f"after {outcome.attempts} attempt(s)"
        )
        return DhPotentialResult(
            sigma=sigma,
            jet_order=outcome.jet_order,
            degree=outcome.degree,
            unknowns=outcome.unknowns,
            solve_time_ms=outcome.solve_time_ms,
        )
