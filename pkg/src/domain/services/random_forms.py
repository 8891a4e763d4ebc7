"""Seeded generators of forms, Lagrangians and source forms for property checks."""
from fractions import Fraction

import numpy as np

from ..entities.bundle import Bundle, Variable, multi_indices
from ..entities.form import Form, Generator
from ..entities.run_config import RunConfig
from ..entities.scalar_expr import ScalarExpr, mono_from_powers
from ..entities.source_form import SourceForm
from ..errors.exceptions import BidegreeError


class RandomForms:
    """Domain service: deterministic random inputs keyed by (seed, case index, salt)."""

    COEFFICIENTS = (
        Fraction(1), Fraction(-1), Fraction(2), Fraction(-2),
        Fraction(1, 2), Fraction(-1, 3), Fraction(3),
    )

    @staticmethod
    def rng(config: RunConfig, case_index: int, salt: int = 0) -> np.random.Generator:
        """Independent stream per case; results do not depend on evaluation order."""
        return np.random.default_rng([config.seed, case_index, salt])

    @staticmethod
    def bundle(config: RunConfig) -> Bundle:
        return Bundle(config.n, config.m)

    @staticmethod
    def _pick(rng: np.random.Generator, pool: list):
        return pool[int(rng.integers(len(pool)))]

    @staticmethod
    def _monomial_pool(bundle: Bundle, max_order: int) -> list[Variable]:
        pool = [Variable.base(lam) for lam in range(1, bundle.n + 1)]
        for i in range(1, bundle.m + 1):
            pool += [Variable.jet(i, dirs) for dirs in multi_indices(bundle.n, max_order)]
        return pool

    @staticmethod
    def _scalar_term(rng: np.random.Generator, bundle: Bundle, config: RunConfig) -> ScalarExpr:
        """coefficient · monomial with jet order <= max_order and degree <= max_degree."""
        pool = RandomForms._monomial_pool(bundle, config.max_order)
        degree = int(rng.integers(config.max_degree + 1))
        powers = [(RandomForms._pick(rng, pool), 1) for _ in range(degree)]
        coef = RandomForms._pick(rng, list(RandomForms.COEFFICIENTS))
        return ScalarExpr(bundle, {mono_from_powers(powers): coef})

    @staticmethod
    def _term_count(rng: np.random.Generator, config: RunConfig) -> int:
        if config.max_terms == 0:
            return 0
        return int(rng.integers(1, config.max_terms + 1))

    @staticmethod
    def random_scalar(config: RunConfig, case_index: int, salt: int = 0) -> ScalarExpr:
        bundle = RandomForms.bundle(config)
        rng = RandomForms.rng(config, case_index, salt)
        result = ScalarExpr.zero(bundle)
        for _ in range(RandomForms._term_count(rng, config)):
            result = result + RandomForms._scalar_term(rng, bundle, config)
        return result

    @staticmethod
    def gen_random_form(
        config: RunConfig, bidegree: tuple[int, int], case_index: int = 0, salt: int = 0
    ) -> Form:
        """
        Random form of the requested bidegree.

        Args:
            config: Bundle dimensions, seed and caps
            bidegree: (k, s) with k >= 0 and 0 <= s <= n
            case_index: Index of the case within a run
            salt: Separates independent draws within one case

        Returns:
            Normalized form with at most max_terms terms; zero when fewer than k
            contact generators exist within max_order

        Raises:
            BidegreeError: If the bidegree is impossible for the bundle
        """
        bundle = RandomForms.bundle(config)
        k, s = bidegree
        if k < 0 or s < 0 or s > bundle.n:
            raise BidegreeError(f"Impossible bidegree ({k}, {s}) for n={bundle.n}")
        rng = RandomForms.rng(config, case_index, salt)
        thetas = [
            Generator.theta(i, dirs)
            for i in range(1, bundle.m + 1)
            for dirs in multi_indices(bundle.n, config.max_order)
        ]
        if k > len(thetas):
            return Form.zero(bundle)
        result = Form.zero(bundle)
        for _ in range(RandomForms._term_count(rng, config)):
            picked = sorted(thetas[int(j)] for j in rng.choice(len(thetas), size=k, replace=False))
            dxs = sorted(int(j) + 1 for j in rng.choice(bundle.n, size=s, replace=False))
            word = tuple(picked) + tuple(Generator.dx(lam) for lam in dxs)
            coef = RandomForms._scalar_term(rng, bundle, config)
            result = result + Form.from_word(coef, word)
        return result

    @staticmethod
    def random_dy_form(config: RunConfig, degree: int, case_index: int = 0, salt: int = 0) -> Form:
        """Random form of the given total degree in the dx/dy basis."""
        bundle = RandomForms.bundle(config)
        rng = RandomForms.rng(config, case_index, salt)
        gens = [Generator.dx(lam) for lam in range(1, bundle.n + 1)]
        gens += [
            Generator.dy(i, dirs)
            for i in range(1, bundle.m + 1)
            for dirs in multi_indices(bundle.n, config.max_order)
        ]
        if degree > len(gens):
            return Form.zero(bundle)
        result = Form.zero(bundle)
        for _ in range(RandomForms._term_count(rng, config)):
            word = tuple(sorted(gens[int(j)] for j in rng.choice(len(gens), size=degree, replace=False)))
            result = result + Form.from_word(RandomForms._scalar_term(rng, bundle, config), word)
        return result

    @staticmethod
    def random_lagrangian(config: RunConfig, case_index: int, salt: int = 0) -> ScalarExpr:
        return RandomForms.random_scalar(config, case_index, salt)

    @staticmethod
    def random_source_form(config: RunConfig, case_index: int, salt: int = 0) -> SourceForm:
        bundle = RandomForms.bundle(config)
        comps = tuple(
            RandomForms.random_scalar(config, case_index, salt * 31 + i)
            for i in range(1, bundle.m + 1)
        )
        return SourceForm(bundle, comps)
