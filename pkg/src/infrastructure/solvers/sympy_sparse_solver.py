"""Exact sparse solver over QQ backed by sympy's SDM."""
import logging
from fractions import Fraction

from sympy import QQ
from sympy.polys.matrices.sdm import SDM

from ...application.ports.linear_solver import LinearSolver
from ...domain.entities.linear_system import LinearSolution, LinearSystem

logger = logging.getLogger(__name__)


class SympySparseSolver(LinearSolver):
    """Solve by reduced row echelon form of the augmented matrix [A | b]."""
    
    def solve(self, system: LinearSystem) -> LinearSolution:
        """
        Solve the system exactly.
        
        Args:
            system: Sparse rational system
            
        Returns:
            LinearSolution; free unknowns are set to zero
        """
        n = system.n_unknowns
        keys = sorted(system.rows)
        elems = {}
        for r, key in enumerate(keys):
            row = {c: QQ(v.numerator, v.denominator) for c, v in system.rows[key].items()}
            rhs = system.rhs.get(key)
            if rhs:
                row[n] = QQ(rhs.numerator, rhs.denominator)
            if row:
                elems[r] = row
        
        logger.debug(f"Solving {len(keys)} x {n} system ({sum(map(len, elems.values()))} nonzeros)")
        
        if not elems:
            return LinearSolution(True, tuple(Fraction(0) for _ in range(n)), rank=0)
        
        matrix = SDM(elems, (len(keys), n + 1), QQ)
        reduced, pivots = matrix.rref()
        rank = sum(1 for p in pivots if p < n)
        
        if n in pivots:
            witness = self._witness(system, keys, n)
            logger.debug(f"Infeasible at rank {rank}: {witness}")
            return LinearSolution(False, rank=rank, witness=witness)
        
        values = [Fraction(0)] * n
        for row in reduced.values():
            if not row:
                continue
            pivot = min(row)
            value = row.get(n, QQ(0))
            values[pivot] = Fraction(int(value.numerator), int(value.denominator))
        return LinearSolution(True, tuple(values), rank=rank)
    
    @staticmethod
    def _witness(system: LinearSystem, keys, n: int) -> str:
        """Describe the inconsistency: a combination of rows reduces to 0 = 1."""
        dropped = [key for key in keys if not system.rows[key] and system.rhs.get(key)]
        detail = f"; {len(dropped)} residual coefficients untouched by any unknown" if dropped else ""
        return f"rows of [A | b] reduce to 0 = 1 ({len(keys)} equations, {n} unknowns{detail})"
    
    def get_solver_info(self) -> dict:
        """Get solver information."""
        return {"backend": "sympy.polys.matrices.sdm.SDM", "domain": "QQ", "method": "rref"}
