"""Candidate bases and linear systems for the linear-ansatz solvers."""
from dataclasses import dataclass
from itertools import combinations
from typing import Callable, Sequence

from ..entities.bundle import Bundle, Variable, direction_counts, multi_indices
from ..entities.form import Form, Generator, Word
from ..entities.linear_system import LinearSystem
from ..entities.scalar_expr import Monomial, ScalarExpr, mono_from_powers

# Fibre multidegree (per fibre index) and direction weight (per base direction).
Grading = tuple[tuple[int, ...], tuple[int, ...]]

FormOperator = Callable[[Form], Form]


def term_grading(bundle: Bundle, word: Word, mono: Monomial) -> Grading:
    """
    Bigrading preserved by d_h, d_v, τ_k and ε_1.

    Fibre part counts jet factors plus contact factors of each fibre. The weight of
    direction λ counts λ in every jet and θ multi-index, minus the power of x^λ,
    minus one when dx^λ is present.
    """
    fibre = [0] * bundle.m
    weight = [0] * bundle.n
    for var, exp in mono:
        if var.is_jet:
            fibre[var.index - 1] += exp
            for lam in var.dirs:
                weight[lam - 1] += exp
        else:
            weight[var.index - 1] -= exp
    for gen in word:
        if gen.is_dx:
            weight[gen.index - 1] -= 1
        else:
            fibre[gen.index - 1] += 1
            for lam in gen.dirs:
                weight[lam - 1] += 1
    return tuple(fibre), tuple(weight)


def form_gradings(form: Form) -> list[Grading]:
    return sorted({term_grading(form.bundle, word, mono) for (word, mono) in form.coordinates()})


@dataclass(frozen=True)
class AnsatzTerm:
    """One unknown: a monomial times a canonical word."""

    word: Word
    mono: Monomial

    def to_form(self, bundle: Bundle) -> Form:
        return Form.from_word(ScalarExpr(bundle, {self.mono: 1}), self.word)


class AnsatzBuilder:
    """Domain service enumerating bounded candidates and assembling exact systems."""

    @staticmethod
    def candidates(
        bundle: Bundle,
        bidegree: tuple[int, int],
        grading: Grading,
        max_order: int,
        max_degree: int,
    ) -> list[AnsatzTerm]:
        """
        Every term of the given bidegree and grading with jet order <= max_order and
        coefficient degree <= max_degree.

        The powers of x are fixed by the grading once the word and the jet factors
        are chosen.
        """
        k, s = bidegree
        if k < 0 or s < 0 or s > bundle.n:
            return []
        fibre, weight = grading
        indices = multi_indices(bundle.n, max_order)
        thetas = [Generator.theta(i, dirs) for i in range(1, bundle.m + 1) for dirs in indices]
        out = []
        for dxs in combinations(range(1, bundle.n + 1), s):
            dx_word = tuple(Generator.dx(lam) for lam in dxs)
            for theta_word in combinations(thetas, k):
                remaining = list(fibre)
                for gen in theta_word:
                    remaining[gen.index - 1] -= 1
                if min(remaining, default=0) < 0:
                    continue
                jet_degree = sum(remaining)
                if jet_degree > max_degree:
                    continue
                counts = [0] * bundle.n
                for gen in theta_word:
                    for lam, c in enumerate(direction_counts(gen.dirs, bundle.n)):
                        counts[lam] += c
                for lam in dxs:
                    counts[lam - 1] -= 1
                # x powers are >= 0 and sum to at most max_degree - jet_degree
                spare = max_degree - jet_degree
                caps = [spare + w - c for c, w in zip(counts, weight)]
                budget = spare + sum(weight) - sum(counts)
                if min(caps, default=0) < 0 or budget < 0:
                    continue
                word = theta_word + dx_word
                for jets in AnsatzBuilder._jet_products(bundle, remaining, indices, caps, budget):
                    x_powers = list(counts)
                    for var in jets:
                        for lam in var.dirs:
                            x_powers[lam - 1] += 1
                    x_powers = [c - w for c, w in zip(x_powers, weight)]
                    if min(x_powers) < 0 or jet_degree + sum(x_powers) > max_degree:
                        continue
                    powers = [(var, 1) for var in jets]
                    powers += [(Variable.base(lam), e) for lam, e in enumerate(x_powers, start=1) if e]
                    out.append(AnsatzTerm(word, mono_from_powers(powers)))
        return out

    @staticmethod
    def _jet_products(
        bundle: Bundle,
        degrees: Sequence[int],
        indices,
        caps: Sequence[int],
        budget: int,
    ) -> list[tuple[Variable, ...]]:
        """
        Multisets of jet variables with the given number of factors per fibre.

        Choices whose multi-indices use direction λ more than caps[λ] times, or
        more than budget directions in total, are pruned while enumerating.
        Output order is fibre by fibre, lexicographic in the order of indices.
        """
        counted = [(dirs, direction_counts(dirs, bundle.n)) for dirs in indices]
        slots = [i for i, q in enumerate(degrees, start=1) for _ in range(q)]
        out: list[tuple[Variable, ...]] = []
        chosen: list[Variable] = []

        def extend(pos: int, start: int, caps: list[int], budget: int) -> None:
            if pos == len(slots):
                out.append(tuple(chosen))
                return
            fibre = slots[pos]
            if pos and slots[pos - 1] != fibre:
                start = 0
            for j in range(start, len(counted)):
                dirs, used = counted[j]
                # indices are sorted shortest first
                if len(dirs) > budget:
                    break
                left = [c - d for c, d in zip(caps, used)]
                if min(left, default=0) < 0:
                    continue
                chosen.append(Variable.jet(fibre, dirs))
                extend(pos + 1, j, left, budget - len(dirs))
                chosen.pop()

        extend(0, 0, list(caps), budget)
        return out

    @staticmethod
    def basis(
        bundle: Bundle,
        bidegree: tuple[int, int],
        gradings: Sequence[Grading],
        max_order: int,
        max_degree: int,
    ) -> list[AnsatzTerm]:
        """Candidates over all target gradings, in a deterministic order."""
        out = []
        for grading in gradings:
            out.extend(AnsatzBuilder.candidates(bundle, bidegree, grading, max_order, max_degree))
        return out

    @staticmethod
    def build_system(
        target: Form,
        blocks: Sequence[tuple[FormOperator, Sequence[AnsatzTerm]]],
    ) -> LinearSystem:
        """
        Equate Σ_blocks operator(Σ c_j b_j) = target coefficient by coefficient.

        Unknowns are numbered block after block in basis order.
        """
        bundle = target.bundle
        total = sum(len(basis) for _, basis in blocks)
        system = LinearSystem(total)
        column = 0
        for operator, basis in blocks:
            for term in basis:
                system.add_column(column, operator(term.to_form(bundle)).coordinates())
                column += 1
        system.set_rhs(target.coordinates())
        return system

    @staticmethod
    def assemble(bundle: Bundle, basis: Sequence[AnsatzTerm], values: Sequence) -> Form:
        """Σ values[j] · basis[j]."""
        out: dict[Word, dict] = {}
        for term, value in zip(basis, values):
            if value:
                out.setdefault(term.word, {})[term.mono] = value
        return Form(bundle, {word: ScalarExpr(bundle, terms) for word, terms in out.items()})
