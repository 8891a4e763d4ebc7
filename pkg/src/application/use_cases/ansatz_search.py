"""Iterative-deepening linear-ansatz search shared by the solver use cases."""
from dataclasses import dataclass
from typing import Callable, Sequence
import logging
import time

from ..ports.linear_solver import LinearSolver
from ...domain.entities.form import Form
from ...domain.entities.solve_bounds import SolveBounds
from ...domain.errors.exceptions import NotFoundWithinBoundsError
from ...domain.services.ansatz_basis import AnsatzBuilder, AnsatzTerm, FormOperator

logger = logging.getLogger(__name__)

# (jet order, degree) -> [(operator, basis), ...]
BlockFactory = Callable[[int, int], Sequence[tuple[FormOperator, Sequence[AnsatzTerm]]]]


@dataclass
class AnsatzOutcome:
    """Solution found at some point of the deepening schedule."""
    parts: list[Form]  # one assembled unknown form per block
    jet_order: int
    degree: int
    unknowns: int
    attempts: int
    solve_time_ms: float


class AnsatzSearch:
    """Try growing bounds until the exact system becomes feasible."""
    
    def __init__(self, solver: LinearSolver):
        """
        Initialize search.
        
        Args:
            solver: Exact linear solver adapter
        """
        self.solver = solver
    
    def run(
        self,
        label: str,
        target: Form,
        make_blocks: BlockFactory,
        bounds: SolveBounds,
        start_order: int,
        start_degree: int,
    ) -> AnsatzOutcome:
        """
        Execute the search.
        
        Args:
            label: Operation name for log records and reports
            target: Right-hand side form
            make_blocks: Builds (operator, basis) blocks for given bounds
            bounds: Final bounds and deepening flag
            start_order: First jet order of the schedule
            start_degree: First degree of the schedule
            
        Returns:
            AnsatzOutcome with the unknown forms
            
        Raises:
            NotFoundWithinBoundsError: If no point of the schedule is feasible
        """
        start_time = time.perf_counter()
        last = None
        attempts = 0
        for order, degree in bounds.schedule(start_order, start_degree):
            attempts += 1
            blocks = make_blocks(order, degree)
            system = AnsatzBuilder.build_system(target, blocks)
            logger.info(
                f"{label}: order {order}, degree {degree}: "
                f"{system.n_unknowns} unknowns, {system.n_rows} equations"
            )
            solution = self.solver.solve(system)
            if solution.feasible:
                parts = []
                offset = 0
                for _, basis in blocks:
                    values = solution.values[offset:offset + len(basis)]
                    parts.append(AnsatzBuilder.assemble(target.bundle, basis, values))
                    offset += len(basis)
                elapsed = (time.perf_counter() - start_time) * 1000
                return AnsatzOutcome(parts, order, degree, system.n_unknowns, attempts, elapsed)
            last = solution
        
        raise NotFoundWithinBoundsError(
            f"{label}: no solution with jet order <= {bounds.max_jet_order} "
            f"and degree <= {bounds.max_poly_degree}",
            bounds=bounds,
            rank=last.rank if last else 0,
            witness=last.witness if last else "",
        )
