"""Test the exact sparse solver."""
from fractions import Fraction

from src.domain.entities.linear_system import LinearSystem


def _system(n, equations):
    """equations: {row key: ({column: coefficient}, rhs)}"""
    system = LinearSystem(n)
    for key, (row, rhs) in equations.items():
        for column, value in row.items():
            system.add_column(column, {key: Fraction(value)})
        system.set_rhs({key: Fraction(rhs)})
    return system


def test_unique_solution(solver):
    system = _system(2, {"a": ({0: 1, 1: 1}, 3), "b": ({0: 1, 1: -1}, 1)})
    solution = solver.solve(system)
    assert solution.feasible
    assert solution.values == (Fraction(2), Fraction(1))
    assert solution.rank == 2


def test_rational_solution(solver):
    solution = solver.solve(_system(1, {"a": ({0: 3}, 1)}))
    assert solution.values == (Fraction(1, 3),)


def test_free_unknowns_are_zero(solver):
    solution = solver.solve(_system(2, {"a": ({0: 1, 1: 1}, 2)}))
    assert solution.feasible
    assert solution.values == (Fraction(2), Fraction(0))
    assert solution.rank == 1


def test_inconsistent_system(solver):
    system = _system(1, {"a": ({0: 1}, 1), "b": ({0: 1}, 2)})
    solution = solver.solve(system)
    assert not solution.feasible
    assert solution.rank == 1
    assert "0 = 1" in solution.witness


def test_right_hand_side_outside_every_column(solver):
    system = LinearSystem(0)
    system.set_rhs({"a": Fraction(1)})
    solution = solver.solve(system)
    assert not solution.feasible
    assert "untouched" in solution.witness


def test_homogeneous_system(solver):
    system = LinearSystem(2)
    system.add_column(0, {"a": Fraction(1)})
    solution = solver.solve(system)
    assert solution.feasible
    assert solution.values == (Fraction(0), Fraction(0))


def test_empty_system(solver):
    solution = solver.solve(LinearSystem(3))
    assert solution.feasible
    assert solution.values == (Fraction(0),) * 3


def test_solver_info(solver):
    assert solver.get_solver_info()["domain"] == "QQ"
