"""Linear solver port."""
from abc import ABC, abstractmethod
from ...domain.entities.linear_system import LinearSolution, LinearSystem


class LinearSolver(ABC):
    """Port for exact rational linear solvers."""
    
    @abstractmethod
    def solve(self, system: LinearSystem) -> LinearSolution:
        """
        Solve A·c = b exactly.
        
        Args:
            system: Sparse system over the rationals
            
        Returns:
            Feasible solution with free unknowns set to zero, or an
            infeasible outcome carrying the rank and a residual witness
        """
        pass
    
    @abstractmethod
    def get_solver_info(self) -> dict:
        """
        Get solver information.
        
        Returns:
            Dict with backend metadata (name, domain)
        """
        pass
