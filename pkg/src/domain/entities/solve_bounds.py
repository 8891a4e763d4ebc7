"""Solve bounds entity."""
from dataclasses import dataclass


@dataclass(frozen=True)
class SolveBounds:
    """Jet-order and polynomial-degree caps for the linear-ansatz solvers."""

    max_jet_order: int
    max_poly_degree: int
    deepening: bool = True

    def __post_init__(self):
        """Validate bounds."""
        if self.max_jet_order < 0:
            raise ValueError("max_jet_order must be >= 0")
        if self.max_poly_degree < 0:
            raise ValueError("max_poly_degree must be >= 0")

    def schedule(self, start_order: int, start_degree: int) -> list[tuple[int, int]]:
        """(order, degree) pairs to try: order outer, degree inner, both ascending.

        Without deepening only the final bounds are tried.
        """
        if not self.deepening:
            return [(self.max_jet_order, self.max_poly_degree)]
        orders = range(min(start_order, self.max_jet_order), self.max_jet_order + 1)
        degrees = range(min(start_degree, self.max_poly_degree), self.max_poly_degree + 1)
        return [(r, d) for r in orders for d in degrees]
