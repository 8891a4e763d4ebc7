"""Domain exceptions."""


class DomainError(Exception):
    """Base domain error."""
    pass


class BundleMismatchError(DomainError):
    """Operands live over different bundles."""
    pass


class IndexOutOfRangeError(DomainError):
    """Base or fibre index outside [1, n] / [1, m]."""
    pass


class BidegreeError(DomainError):
    """Form does not have the bidegree an operation requires."""
    pass


class PreconditionViolationError(DomainError):
    """Operation precondition does not hold for the given input."""
    pass


class NotFoundWithinBoundsError(DomainError):
    """Linear-ansatz solver found no solution within the search bounds."""

    def __init__(self, message: str, bounds=None, rank: int = 0, witness: str = ""):
        super().__init__(message)
        self.bounds = bounds
        self.rank = rank
        self.witness = witness

    def report(self) -> str:
        """Textual infeasibility report."""
        lines = [str(self)]
        if self.bounds is not None:
            lines.append(
                f"bounds: max_jet_order={self.bounds.max_jet_order} "
                f"max_poly_degree={self.bounds.max_poly_degree}"
            )
        lines.append(f"rank: {self.rank}")
        if self.witness:
            lines.append(f"witness: {self.witness}")
        return "\n".join(lines)


class SelfCheckFailedError(DomainError):
    """An internal identity that must hold did not (internal inconsistency)."""
    pass


class FormSyntaxError(DomainError):
    """Form text could not be parsed."""

    def __init__(self, message: str, line: int = 1, column: int = 1):
        super().__init__(f"{message} (line {line}, column {column})")
        self.line = line
        self.column = column


class InvalidConfigError(DomainError):
    """Invalid run configuration."""
    pass
