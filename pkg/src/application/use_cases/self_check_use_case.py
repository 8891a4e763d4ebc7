"""Self-check use case: run every identity over seeded random cases."""
from dataclasses import dataclass, field
from typing import Callable, List, Optional
from concurrent.futures import ThreadPoolExecutor
import logging
import time

from ..ports.form_codec import FormCodec
from ..ports.linear_solver import LinearSolver
from .dh_potential_use_case import DhPotentialUseCase
from .ker_dhdv_decompose_use_case import KerDhDvDecomposeUseCase
from .lagrangian_search_use_case import LagrangianSearchUseCase
from ...domain.entities.form import Form
from ...domain.entities.run_config import RunConfig
from ...domain.services.invariant_suite import Identity, InvariantSuite, SuiteHooks

logger = logging.getLogger(__name__)


@dataclass
class SelfCheckProgress:
    """Progress information for a self-check run."""
    total: int
    completed: int
    current_identity: str
    elapsed_time_ms: float
    
    @property
    def percentage(self) -> float:
        """Get completion percentage."""
        return self.completed / self.total * 100 if self.total > 0 else 0.0


@dataclass
class IdentityTally:
    """Per-identity counters."""
    name: str
    module: str
    cases: int = 0
    passed: int = 0
    failed: int = 0
    first_failure: Optional[str] = None  # "case N: reason"


@dataclass
class SelfCheckResult:
    """Result of a self-check run."""
    config: RunConfig
    tallies: List[IdentityTally] = field(default_factory=list)
    total_time_ms: float = 0.0
    
    @property
    def failed(self) -> int:
        return sum(t.failed for t in self.tallies)
    
    @property
    def passed(self) -> bool:
        return self.failed == 0


class SelfCheckUseCase:
    """Use case running the invariant suite, optionally on a thread pool."""
    
    def __init__(self, solver: LinearSolver, codec: FormCodec):
        """
        Initialize self-check use case.
        
        Args:
            solver: Exact linear solver adapter
            codec: Form codec used for the round-trip identities
        """
        dh = DhPotentialUseCase(solver)
        kerdhdv = KerDhDvDecomposeUseCase(solver)
        lagrangian = LagrangianSearchUseCase(solver)
        
        def decompose(form, bounds):
            result = kerdhdv.execute(form, bounds)
            return result.sigma, result.xi, result.phi_x
        
        def round_trip(form: Form, fmt: str) -> Form:
            return codec.parse_form(codec.print_form(form, fmt), form.bundle)
        
        self.hooks = SuiteHooks(
            dh_potential=lambda form, bounds: dh.execute(form, bounds).sigma,
            ker_dhdv=decompose,
            find_lagrangian=lambda source, bounds: lagrangian.execute(source, bounds).lagrangian,
            round_trip=round_trip,
        )
    
    def execute(
        self,
        config: RunConfig,
        progress_callback: Callable[[SelfCheckProgress], None] | None = None,
    ) -> SelfCheckResult:
        """
        Execute the self-check.
        
        Every (identity, case) pair draws from its own random stream, so the
        result does not depend on config.workers.
        
        Args:
            config: Bundle, seed, case count and generator caps
            progress_callback: Optional callback for progress updates
            
        Returns:
            SelfCheckResult with per-identity tallies in suite order
        """
        start_time = time.perf_counter()
        identities = InvariantSuite.identities()
        logger.info(
            f"Self-check: {len(identities)} identities x {config.cases} cases, "
            f"seed {config.seed}, n={config.n}, m={config.m}, workers {config.workers}"
        )
        
        jobs = [
            (salt, identity, case)
            for salt, identity in enumerate(identities)
            for case in range(config.cases)
        ]
        outcomes: dict[tuple[int, int], Optional[str]] = {}
        
        with ThreadPoolExecutor(max_workers=config.workers) as executor:
            futures = [
                (salt, identity, case, executor.submit(self._run_case, identity, config, case, salt))
                for salt, identity, case in jobs
            ]
            
            for completed, (salt, identity, case, future) in enumerate(futures, start=1):
                outcomes[(salt, case)] = future.result()
                if progress_callback:
                    progress_callback(SelfCheckProgress(
                        total=len(futures),
                        completed=completed,
                        current_identity=identity.name,
                        elapsed_time_ms=(time.perf_counter() - start_time) * 1000
                    ))
        
        # Merge in suite order
        tallies = []
        for salt, identity in enumerate(identities):
            tally = IdentityTally(identity.name, identity.module)
            for case in range(config.cases):
                failure = outcomes[(salt, case)]
                tally.cases += 1
                if failure is None:
                    tally.passed += 1
                else:
                    tally.failed += 1
                    if tally.first_failure is None:
                        tally.first_failure = f"case {case}: {failure}"
            tallies.append(tally)
        
        total_time = (time.perf_counter() - start_time) * 1000
        result = SelfCheckResult(config=config, tallies=tallies, total_time_ms=total_time)
        logger.info(f"Self-check finished: {result.failed} failure(s) in {total_time:.0f} ms")
        return result
    
    def _run_case(self, identity: Identity, config: RunConfig, case: int, salt: int) -> Optional[str]:
        """
        Run one case (runs in thread pool).
        
        Returns:
            None on success, otherwise the failure reason
        """
        try:
            if identity.check(config, case, salt, self.hooks):
                return None
            return "identity does not hold"
        except Exception as e:
            logger.debug(f"{identity.name} case {case} raised {type(e).__name__}: {e}")
            return f"{type(e).__name__}: {e}"
