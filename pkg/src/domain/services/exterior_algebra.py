"""Exterior algebra operations on forms in the contact basis."""
from ..entities.form import Form, Generator, Word, merge_words, word_bidegree
from ..entities.scalar_expr import ScalarExpr
from ..errors.exceptions import BidegreeError
from .scalar_calculus import ScalarCalculus


class ExteriorAlgebra:
    """Domain service for wedge products, basis conversion, projections and contractions."""

    @staticmethod
    def wedge(a: Form, b: Form) -> Form:
        """
        Bilinear wedge product with canonical reordering.

        Args:
            a: Left factor
            b: Right factor

        Returns:
            a ∧ b; terms with a repeated generator vanish
        """
        a.bundle.require_same(b.bundle)
        out: dict[Word, ScalarExpr] = {}
        for w1, c1 in a.components.items():
            for w2, c2 in b.components.items():
                merged = merge_words(w1, w2)
                if merged is None:
                    continue
                sign, word = merged
                coef = c1 * c2
                if sign < 0:
                    coef = -coef
                out[word] = out[word] + coef if word in out else coef
        return Form(a.bundle, out)

    @staticmethod
    def wedge_all(first: Form, *rest: Form) -> Form:
        result = first
        for factor in rest:
            result = ExteriorAlgebra.wedge(result, factor)
        return result

    @staticmethod
    def _contact_image(bundle, gen: Generator) -> Form:
        """dy^i_Λ -> θ^i_Λ + Σ_λ y^i_{Λ+λ} dx^λ; other generators map to themselves."""
        if gen.kind != Generator.DY:
            return Form.generator(bundle, gen)
        image = Form.theta(bundle, gen.index, gen.dirs)
        for lam in range(1, bundle.n + 1):
            y = ScalarExpr.jet(bundle, gen.index, gen.dirs + (lam,))
            image = image + Form.dx(bundle, lam) * y
        return image

    @staticmethod
    def convert_dy_to_contact(form: Form) -> Form:
        """Rewrite every dy generator in the contact basis; multiplicative on words."""
        if not form.has_dy():
            return form
        bundle = form.bundle
        result = Form.zero(bundle)
        for word, coef in form.components.items():
            term = Form.scalar(coef)
            for gen in word:
                term = ExteriorAlgebra.wedge(term, ExteriorAlgebra._contact_image(bundle, gen))
            result = result + term
        return result

    @staticmethod
    def split_bidegree(form: Form) -> list[tuple[int, int, Form]]:
        """
        Unique decomposition into nonzero pure-bidegree components.

        Returns:
            List of (k, s, component) sorted by (k, s)
        """
        form = ExteriorAlgebra.convert_dy_to_contact(form)
        groups: dict[tuple[int, int], dict] = {}
        for word, coef in form.components.items():
            groups.setdefault(word_bidegree(word), {})[word] = coef
        return [(k, s, Form(form.bundle, groups[(k, s)])) for k, s in sorted(groups)]

    @staticmethod
    def contact_projection(form: Form, k: int) -> Form:
        """h_k: the contact-degree-k part; h_0 is the horizontal projection."""
        if k < 0:
            raise BidegreeError(f"Contact degree must be >= 0, got {k}")
        form = ExteriorAlgebra.convert_dy_to_contact(form)
        return Form(
            form.bundle,
            {word: coef for word, coef in form.components.items() if word_bidegree(word)[0] == k},
        )

    @staticmethod
    def horizontal_projection(form: Form) -> Form:
        return ExteriorAlgebra.contact_projection(form, 0)

    @staticmethod
    def zero_section_pullback(form: Form) -> Form:
        """Set every y^i_Λ to zero and drop every term with a θ (or dy) factor."""
        form = ExteriorAlgebra.convert_dy_to_contact(form)
        out = {}
        for word, coef in form.components.items():
            if any(g.is_vertical for g in word):
                continue
            out[word] = ScalarCalculus.substitute_zero_section(coef)
        return Form(form.bundle, out)

    @staticmethod
    def euler_contraction(form: Form) -> Form:
        """
        Graded interior product with ȳ = y^i_Λ ∂_i^Λ.

        θ^i_Λ contracts to y^i_Λ, dx to 0; the j-th slot carries sign (-1)^j.
        """
        bundle = form.bundle
        out: dict[Word, ScalarExpr] = {}
        for word, coef in form.components.items():
            for j, gen in enumerate(word):
                if not gen.is_vertical:
                    continue
                rest = word[:j] + word[j + 1:]
                value = coef * ScalarExpr.jet(bundle, gen.index, gen.dirs)
                if j % 2:
                    value = -value
                out[rest] = out[rest] + value if rest in out else value
        return Form(bundle, out)

    @staticmethod
    def contract_generator(form: Form, gen: Generator) -> Form:
        """Interior product with the vector dual to gen (ρ_{i,Λ} for gen = θ^i_Λ)."""
        out: dict[Word, ScalarExpr] = {}
        for word, coef in form.components.items():
            if gen not in word:
                continue
            j = word.index(gen)
            rest = word[:j] + word[j + 1:]
            value = -coef if j % 2 else coef
            out[rest] = out[rest] + value if rest in out else value
        return Form(form.bundle, out)

    @staticmethod
    def vertical_generators(form: Form) -> list[Generator]:
        """Distinct θ generators occurring in the form's words."""
        return sorted({g for word in form.components for g in word if g.kind == Generator.THETA})
