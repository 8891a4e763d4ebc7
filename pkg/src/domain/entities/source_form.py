"""Source form entity: Δ_i θ^i ∧ ω."""
from dataclasses import dataclass

from .bundle import Bundle
from .form import Form, Generator
from .scalar_expr import ScalarExpr
from ..errors.exceptions import BidegreeError


@dataclass(frozen=True)
class SourceForm:
    """Element of E_1, stored as its m component functions."""

    bundle: Bundle
    components: tuple[ScalarExpr, ...]

    def __post_init__(self):
        """Validate component count."""
        if len(self.components) != self.bundle.m:
            raise ValueError(
                f"Expected {self.bundle.m} components, got {len(self.components)}"
            )
        for comp in self.components:
            self.bundle.require_same(comp.bundle)

    @staticmethod
    def zero(bundle: Bundle) -> "SourceForm":
        return SourceForm(bundle, tuple(ScalarExpr.zero(bundle) for _ in range(bundle.m)))

    @staticmethod
    def from_form(form: Form) -> "SourceForm":
        """Read Δ_i off a form of shape Σ Δ_i θ^i ∧ ω.

        Raises:
            BidegreeError: If some term is not an order-zero θ^i times ω
        """
        bundle = form.bundle
        volume = Form.volume_word(bundle)
        comps = [ScalarExpr.zero(bundle) for _ in range(bundle.m)]
        for word, coef in form.components.items():
            head, rest = word[:1], word[1:]
            if (
                len(head) != 1
                or head[0].kind != Generator.THETA
                or head[0].order != 0
                or rest != volume
            ):
                raise BidegreeError("Source form terms must be Δ_i θ^i ∧ ω with order-zero θ^i")
            comps[head[0].index - 1] = coef
        return SourceForm(bundle, tuple(comps))

    def to_form(self) -> Form:
        volume = Form.volume_word(self.bundle)
        return Form(
            self.bundle,
            {(Generator.theta(i),) + volume: comp for i, comp in enumerate(self.components, start=1)},
        )

    def is_zero(self) -> bool:
        return all(comp.is_zero() for comp in self.components)

    def component(self, i: int) -> ScalarExpr:
        """Δ_i for fibre index i (1-based)."""
        self.bundle.check_fibre(i)
        return self.components[i - 1]
