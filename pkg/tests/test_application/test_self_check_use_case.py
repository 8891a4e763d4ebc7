"""Test self-check use case."""
import pytest

from src.application.use_cases.self_check_use_case import SelfCheckUseCase
from src.domain.entities.run_config import RunConfig
from src.domain.services.invariant_suite import InvariantSuite


@pytest.fixture
def use_case(solver, codec):
    return SelfCheckUseCase(solver, codec)


@pytest.fixture
def small_config():
    return RunConfig(n=1, m=1, seed=1, cases=2, max_order=2, max_degree=2, max_terms=2)


def test_every_identity_passes(use_case, small_config):
    result = use_case.execute(small_config)
    failures = [t.first_failure for t in result.tallies if t.failed]
    assert failures == []
    assert result.passed
    assert len(result.tallies) == len(InvariantSuite.identities())
    assert all(t.cases == small_config.cases for t in result.tallies)


def test_worker_count_does_not_change_results(use_case, small_config):
    sequential = use_case.execute(small_config)
    parallel_config = RunConfig(**{**small_config.__dict__, "workers": 3})
    parallel = use_case.execute(parallel_config)
    assert sequential.tallies == parallel.tallies


def test_progress_is_reported(use_case):
    config = RunConfig(n=1, m=1, cases=1, max_terms=1)
    updates = []
    use_case.execute(config, progress_callback=updates.append)
    assert updates[-1].completed == updates[-1].total
    assert updates[-1].percentage == 100.0


def test_failing_identity_is_tallied(use_case, small_config, monkeypatch):
    from src.domain.services import invariant_suite

    original = InvariantSuite.identities()

    def broken():
        bad = invariant_suite.Identity("always fails", "calculus", lambda *args: False)
        return original[:1] + [bad]

    monkeypatch.setattr(InvariantSuite, "identities", staticmethod(broken))
    result = use_case.execute(small_config)
    assert not result.passed
    assert result.failed == small_config.cases
    assert result.tallies[1].first_failure == "case 0: identity does not hold"


def test_suite_covers_every_module():
    modules = {identity.module for identity in InvariantSuite.identities()}
    assert modules == {"forms", "calculus", "euler", "homotopy", "cli"}
    names = [identity.name for identity in InvariantSuite.identities()]
    assert len(names) == len(set(names))


@pytest.mark.parametrize("n, m", [(2, 2), (3, 1)])
def test_every_identity_passes_on_larger_bundles(use_case, n, m):
    config = RunConfig(n=n, m=m, seed=5, cases=2, max_order=1, max_degree=2, max_terms=2)
    result = use_case.execute(config)
    assert [t.first_failure for t in result.tallies if t.failed] == []


def test_fixed_cases_belong_to_the_euler_module():
    modules = {identity.name: identity.module for identity in InvariantSuite.identities()}
    assert modules["fixed Euler–Lagrange and Helmholtz cases"] == "euler"
