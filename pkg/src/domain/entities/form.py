"""Form entity: finite sum of scalar coefficients times canonical wedge words."""
from dataclasses import dataclass, field
from fractions import Fraction
from numbers import Rational
from typing import Iterable, NamedTuple, Optional

from .bundle import Bundle, MultiIndex, format_multi_index, make_multi_index
from .scalar_expr import Monomial, ScalarExpr
from ..errors.exceptions import BidegreeError


class Generator(NamedTuple):
    """Exterior generator θ^i_Λ, dy^i_Λ or dx^λ.

    Tuple comparison gives the canonical order: all θ (by i, |Λ|, Λ)
    before dy before dx (by λ).
    """

    kind: int
    index: int
    order: int
    dirs: MultiIndex

    THETA = 0
    DY = 1
    DX = 2

    @classmethod
    def theta(cls, i: int, dirs: Iterable[int] = ()) -> "Generator":
        dirs = make_multi_index(dirs)
        return cls(cls.THETA, i, len(dirs), dirs)

    @classmethod
    def dy(cls, i: int, dirs: Iterable[int] = ()) -> "Generator":
        dirs = make_multi_index(dirs)
        return cls(cls.DY, i, len(dirs), dirs)

    @classmethod
    def dx(cls, lam: int) -> "Generator":
        return cls(cls.DX, lam, 0, ())

    @property
    def is_dx(self) -> bool:
        return self.kind == self.DX

    @property
    def is_vertical(self) -> bool:
        """θ or dy: contracts against the fibre Euler field."""
        return self.kind != self.DX

    def prolong(self, lam: int) -> "Generator":
        """θ^i_Λ -> θ^i_{Λ+λ} (same for dy)."""
        return Generator(self.kind, self.index, self.order + 1, make_multi_index(self.dirs + (lam,)))

    def validate(self, bundle: Bundle) -> None:
        if self.kind == self.DX:
            bundle.check_base(self.index)
        else:
            bundle.check_fibre(self.index)
            bundle.check_multi_index(self.dirs)


# Strictly increasing tuple of generators.
Word = tuple[Generator, ...]


def sort_word(seq: Iterable[Generator]) -> Optional[tuple[int, Word]]:
    """Sort a generator sequence into canonical order.

    Returns (sign of the sorting permutation, word), or None when a generator repeats.
    """
    seq = list(seq)
    if len(set(seq)) != len(seq):
        return None
    inversions = 0
    for i in range(len(seq)):
        for j in range(i + 1, len(seq)):
            if seq[i] > seq[j]:
                inversions += 1
    return (-1 if inversions % 2 else 1), tuple(sorted(seq))


def merge_words(a: Word, b: Word) -> Optional[tuple[int, Word]]:
    """Concatenate a∧b and sort into canonical order."""
    if not a:
        return 1, b
    if not b:
        return 1, a
    return sort_word(a + b)


def word_bidegree(word: Word) -> tuple[int, int]:
    s = sum(1 for g in word if g.is_dx)
    return len(word) - s, s


def word_sort_key(word: Word):
    return (len(word), word)


@dataclass(frozen=True)
class FormTerm:
    """Coefficient times a canonical wedge word."""

    coef: ScalarExpr
    thetas: tuple[Generator, ...]
    dxs: tuple[Generator, ...]

    @property
    def word(self) -> Word:
        return self.thetas + self.dxs

    @property
    def bidegree(self) -> tuple[int, int]:
        return len(self.thetas), len(self.dxs)


@dataclass(frozen=True, eq=False)
class Form:
    """Element of the exterior algebra in the contact (or dy) basis."""

    bundle: Bundle
    components: dict[Word, ScalarExpr] = field(default_factory=dict)

    def __post_init__(self):
        """Drop zero coefficients."""
        clean = {word: coef for word, coef in self.components.items() if not coef.is_zero()}
        object.__setattr__(self, "components", clean)

    # Constructors

    @staticmethod
    def zero(bundle: Bundle) -> "Form":
        return Form(bundle)

    @staticmethod
    def scalar(expr: ScalarExpr) -> "Form":
        return Form(expr.bundle, {(): expr})

    @staticmethod
    def constant(bundle: Bundle, value) -> "Form":
        return Form.scalar(ScalarExpr.constant(bundle, value))

    @staticmethod
    def generator(bundle: Bundle, gen: Generator) -> "Form":
        gen.validate(bundle)
        return Form(bundle, {(gen,): ScalarExpr.constant(bundle, 1)})

    @staticmethod
    def dx(bundle: Bundle, lam: int) -> "Form":
        return Form.generator(bundle, Generator.dx(lam))

    @staticmethod
    def theta(bundle: Bundle, i: int, dirs: Iterable[int] = ()) -> "Form":
        return Form.generator(bundle, Generator.theta(i, dirs))

    @staticmethod
    def dy(bundle: Bundle, i: int, dirs: Iterable[int] = ()) -> "Form":
        return Form.generator(bundle, Generator.dy(i, dirs))

    @staticmethod
    def from_word(coef: ScalarExpr, word: Word) -> "Form":
        """Single term; word must already be canonical."""
        return Form(coef.bundle, {tuple(word): coef})

    @staticmethod
    def volume_word(bundle: Bundle) -> Word:
        """ω = dx^1∧...∧dx^n."""
        return tuple(Generator.dx(lam) for lam in range(1, bundle.n + 1))

    @staticmethod
    def top(coef: ScalarExpr) -> "Form":
        """coef·ω."""
        return Form.from_word(coef, Form.volume_word(coef.bundle))

    # Queries

    @property
    def terms(self) -> list[FormTerm]:
        """Terms in canonical word order."""
        out = []
        for word in sorted(self.components, key=word_sort_key):
            k = sum(1 for g in word if not g.is_dx)
            out.append(FormTerm(self.components[word], word[:k], word[k:]))
        return out

    def items(self) -> list[tuple[Word, ScalarExpr]]:
        return [(word, self.components[word]) for word in sorted(self.components, key=word_sort_key)]

    def is_zero(self) -> bool:
        return not self.components

    def has_dy(self) -> bool:
        return any(g.kind == Generator.DY for word in self.components for g in word)

    def has_theta(self) -> bool:
        return any(g.kind == Generator.THETA for word in self.components for g in word)

    def bidegrees(self) -> list[tuple[int, int]]:
        return sorted({word_bidegree(word) for word in self.components})

    def bidegree(self) -> tuple[int, int]:
        """Bidegree of a pure form; raises on mixed or zero forms."""
        degrees = self.bidegrees()
        if len(degrees) != 1:
            raise BidegreeError(f"Form is not of pure bidegree: {degrees or 'zero form'}")
        return degrees[0]

    def is_pure(self, k: int, s: int) -> bool:
        """True when every term has bidegree (k, s); the zero form qualifies."""
        return all(word_bidegree(word) == (k, s) for word in self.components)

    def is_scalar(self) -> bool:
        return all(word == () for word in self.components)

    def scalar_part(self) -> ScalarExpr:
        return self.components.get((), ScalarExpr.zero(self.bundle))

    def coefficient(self, word: Word) -> ScalarExpr:
        return self.components.get(tuple(word), ScalarExpr.zero(self.bundle))

    def jet_order(self) -> int:
        """Max |Λ| over coefficients and θ/dy generators."""
        orders = [coef.jet_order() for coef in self.components.values()]
        orders += [g.order for word in self.components for g in word if g.is_vertical]
        return max(orders, default=0)

    def degree(self) -> int:
        """Max coefficient degree."""
        return max((coef.degree() for coef in self.components.values()), default=0)

    def coordinates(self) -> dict[tuple[Word, Monomial], Fraction]:
        """Flatten into (word, monomial) -> rational."""
        out = {}
        for word, coef in self.components.items():
            for mono, value in coef.terms.items():
                out[(word, mono)] = value
        return out

    # Arithmetic

    def __add__(self, other: "Form") -> "Form":
        if not isinstance(other, Form):
            return NotImplemented
        self.bundle.require_same(other.bundle)
        out = dict(self.components)
        for word, coef in other.components.items():
            out[word] = out[word] + coef if word in out else coef
        return Form(self.bundle, out)

    def __neg__(self) -> "Form":
        return Form(self.bundle, {word: -coef for word, coef in self.components.items()})

    def __sub__(self, other: "Form") -> "Form":
        if not isinstance(other, Form):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other) -> "Form":
        """Multiply every coefficient by a scalar expression or number."""
        if isinstance(other, ScalarExpr):
            self.bundle.require_same(other.bundle)
        elif not isinstance(other, (int, Rational)):
            return NotImplemented
        return Form(self.bundle, {word: coef * other for word, coef in self.components.items()})

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, Form):
            return NotImplemented
        return self.bundle == other.bundle and self.components == other.components

    def __hash__(self) -> int:
        return hash((self.bundle, frozenset(self.components.items())))

    def __repr__(self) -> str:
        parts = []
        for word, coef in self.items():
            names = "^".join(generator_name(g) for g in word)
            parts.append(f"{coef!r}" + (f"*{names}" if names else ""))
        return "Form(" + (" + ".join(parts) or "0") + ")"


def generator_name(g: Generator) -> str:
    """Text spelling: dx1, th1, th1_12, du2_1."""
    if g.kind == Generator.DX:
        return f"dx{g.index}"
    prefix = "th" if g.kind == Generator.THETA else "du"
    suffix = "_" + format_multi_index(g.dirs) if g.dirs else ""
    return f"{prefix}{g.index}{suffix}"
