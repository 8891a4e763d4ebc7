"""Bundle, multi-index and coordinate variable entities."""
from dataclasses import dataclass
from itertools import combinations_with_replacement
from typing import Iterable, NamedTuple

from ..errors.exceptions import BundleMismatchError, IndexOutOfRangeError


# Symmetric multi-index over base directions: sorted tuple, () is the empty index.
MultiIndex = tuple[int, ...]


def make_multi_index(dirs: Iterable[int]) -> MultiIndex:
    """Normalize a sequence of base directions into a sorted multi-index."""
    return tuple(sorted(dirs))


def merge_multi_index(a: MultiIndex, b: MultiIndex) -> MultiIndex:
    """Multiset union Λ+Σ of two multi-indices."""
    return tuple(sorted(a + b))


def direction_counts(dirs: MultiIndex, n: int) -> list[int]:
    """Count how often each direction 1..n occurs in the multi-index."""
    counts = [0] * n
    for lam in dirs:
        counts[lam - 1] += 1
    return counts


def multi_indices(n: int, max_order: int) -> list[MultiIndex]:
    """All multi-indices over 1..n of length <= max_order, shortest first."""
    out = []
    for order in range(max_order + 1):
        out.extend(combinations_with_replacement(range(1, n + 1), order))
    return out


def format_multi_index(dirs: MultiIndex) -> str:
    """Digit-string spelling, or bracketed form when a direction exceeds 9."""
    if any(lam > 9 for lam in dirs):
        return "[" + ",".join(str(lam) for lam in dirs) + "]"
    return "".join(str(lam) for lam in dirs)


@dataclass(frozen=True)
class Bundle:
    """Trivial bundle R^(n+m) -> R^n."""

    n: int
    m: int

    def __post_init__(self):
        """Validate dimensions."""
        if self.n < 1:
            raise ValueError(f"Base dimension must be >= 1, got {self.n}")
        if self.m < 1:
            raise ValueError(f"Fibre dimension must be >= 1, got {self.m}")

    def check_base(self, lam: int) -> None:
        """Raise if lam is not a base direction."""
        if not 1 <= lam <= self.n:
            raise IndexOutOfRangeError(f"Base index {lam} outside [1, {self.n}]")

    def check_fibre(self, i: int) -> None:
        """Raise if i is not a fibre index."""
        if not 1 <= i <= self.m:
            raise IndexOutOfRangeError(f"Fibre index {i} outside [1, {self.m}]")

    def check_multi_index(self, dirs: MultiIndex) -> None:
        """Raise if the multi-index is unsorted or out of range."""
        if list(dirs) != sorted(dirs):
            raise IndexOutOfRangeError(f"Multi-index {dirs} is not non-decreasing")
        for lam in dirs:
            self.check_base(lam)

    def require_same(self, other: "Bundle") -> None:
        """Raise if other is a different bundle."""
        if self != other:
            raise BundleMismatchError(
                f"Bundle mismatch: (n={self.n}, m={self.m}) vs (n={other.n}, m={other.m})"
            )


class Variable(NamedTuple):
    """Coordinate x^λ (kind BASE) or y^i_Λ (kind JET).

    Field order makes tuple comparison the canonical variable order:
    base variables by λ, then jet variables by (i, |Λ|, Λ).
    """

    kind: int
    index: int
    order: int
    dirs: MultiIndex

    BASE = 0
    JET = 1

    @classmethod
    def base(cls, lam: int) -> "Variable":
        return cls(cls.BASE, lam, 0, ())

    @classmethod
    def jet(cls, i: int, dirs: Iterable[int] = ()) -> "Variable":
        dirs = make_multi_index(dirs)
        return cls(cls.JET, i, len(dirs), dirs)

    @property
    def is_jet(self) -> bool:
        return self.kind == self.JET

    def prolong(self, lam: int) -> "Variable":
        """y^i_Λ -> y^i_{Λ+λ}."""
        return Variable.jet(self.index, self.dirs + (lam,))

    @property
    def name(self) -> str:
        if self.kind == self.BASE:
            return f"x{self.index}"
        if not self.dirs:
            return f"u{self.index}"
        return f"u{self.index}_{format_multi_index(self.dirs)}"

    def validate(self, bundle: Bundle) -> None:
        """Raise if the indices do not fit the bundle."""
        if self.kind == self.BASE:
            bundle.check_base(self.index)
        else:
            bundle.check_fibre(self.index)
            bundle.check_multi_index(self.dirs)
