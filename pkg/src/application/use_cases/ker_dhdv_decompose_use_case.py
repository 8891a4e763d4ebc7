"""Decomposition of d_h∘d_v-closed forms."""
from dataclasses import dataclass
import logging

from ..ports.linear_solver import LinearSolver
from .ansatz_search import AnsatzSearch
from ...domain.entities.form import Form
from ...domain.entities.solve_bounds import SolveBounds
from ...domain.errors.exceptions import (
    NotFoundWithinBoundsError,
    PreconditionViolationError,
    SelfCheckFailedError,
)
from ...domain.services.ansatz_basis import AnsatzBuilder, form_gradings
from ...domain.services.differentials import Differentials
from ...domain.services.exterior_algebra import ExteriorAlgebra

logger = logging.getLogger(__name__)


@dataclass
class KerDhDvResult:
    """φ = σ + ξ + φ_X with d_h σ = 0, d_v ξ = 0 and φ_X on the base."""
    sigma: Form
    xi: Form
    phi_x: Form
    alpha: Form
    beta: Form
    # σ = d_h(α) and ξ = d_v(β), not merely closed
    stronger_than_lemma: bool = True


class KerDhDvDecomposeUseCase:
    """Use case for splitting φ ∈ Ker d_h d_v into d_h-closed, d_v-closed and base parts."""
    
    def __init__(self, solver: LinearSolver):
        """
        Initialize use case.
        
        Args:
            solver: Exact linear solver adapter
        """
        self.search = AnsatzSearch(solver)
    
    def execute(self, form: Form, bounds: SolveBounds) -> KerDhDvResult:
        """
        Solve φ - φ_X = d_h(α) + d_v(β) one bidegree component at a time.

        A component of horizontal degree n is d_h-closed already; when no α, β
        within bounds reproduce it, it is kept in σ as it is.
        
        Args:
            form: Form with d_h(d_v(φ)) = 0
            bounds: Search bounds for α and β
            
        Returns:
            KerDhDvResult
            
        Raises:
            PreconditionViolationError: If d_h(d_v(φ)) != 0
            NotFoundWithinBoundsError: If a component below top degree has no solution within bounds
        """
        form = ExteriorAlgebra.convert_dy_to_contact(form)
        bundle = form.bundle
        if not Differentials.d_h(Differentials.d_v(form)).is_zero():
            raise PreconditionViolationError("ker_dhdv_decompose expects d_h(d_v(φ)) = 0")
        
        phi_x = ExteriorAlgebra.zero_section_pullback(form)
        rest = form - phi_x
        alpha = Form.zero(bundle)
        beta = Form.zero(bundle)
        closed = Form.zero(bundle)
        
        for k, s, component in ExteriorAlgebra.split_bidegree(rest):
            gradings = form_gradings(component)
            
            def blocks(order: int, degree: int, k=k, s=s, gradings=gradings):
                return [
                    (Differentials.d_h, AnsatzBuilder.basis(bundle, (k, s - 1), gradings, order, degree)),
                    (Differentials.d_v, AnsatzBuilder.basis(bundle, (k - 1, s), gradings, order, degree)),
                ]
            
            try:
                outcome = self.search.run(
                    f"ker_dhdv_decompose ({k}, {s})",
                    component,
                    blocks,
                    bounds,
                    start_order=max(component.jet_order() - 1, 0),
                    start_degree=component.degree(),
                )
            except NotFoundWithinBoundsError:
                if s != bundle.n:
                    raise
                logger.info(f"ker_dhdv_decompose ({k}, {s}): kept as a d_h-closed top-degree part")
                closed = closed + component
                continue
            alpha = alpha + outcome.parts[0]
            beta = beta + outcome.parts[1]
        
        sigma = Differentials.d_h(alpha) + closed
        xi = Differentials.d_v(beta)
        if sigma + xi + phi_x != form:
            raise SelfCheckFailedError("ker_dhdv_decompose: parts do not sum to the input")
        
        logger.info(f"ker_dhdv_decompose: {len(ExteriorAlgebra.split_bidegree(rest))} component(s) solved")
        return KerDhDvResult(
            sigma=sigma,
            xi=xi,
            phi_x=phi_x,
            alpha=alpha,
            beta=beta,
            stronger_than_lemma=closed.is_zero(),
        )
