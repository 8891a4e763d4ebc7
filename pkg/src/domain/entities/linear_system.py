"""Linear system entities for the exact ansatz solvers."""
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Hashable


@dataclass
class LinearSystem:
    """Sparse system A·c = b over the rationals.

    Rows are keyed by (generator word, monomial) of the residual.
    """

    n_unknowns: int
    rows: dict[Hashable, dict[int, Fraction]] = field(default_factory=dict)
    rhs: dict[Hashable, Fraction] = field(default_factory=dict)

    def add_column(self, column: int, entries: dict[Hashable, Fraction]) -> None:
        for key, value in entries.items():
            if value:
                self.rows.setdefault(key, {})[column] = Fraction(value)

    def set_rhs(self, entries: dict[Hashable, Fraction]) -> None:
        for key, value in entries.items():
            if value:
                self.rhs[key] = Fraction(value)
                self.rows.setdefault(key, {})

    @property
    def n_rows(self) -> int:
        return len(self.rows)


@dataclass
class LinearSolution:
    """Solver outcome: a particular solution, or an infeasibility witness."""

    feasible: bool
    values: tuple[Fraction, ...] = ()
    rank: int = 0
    witness: str = ""
