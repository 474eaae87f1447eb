"""
Verification coordinator

Builds the conjecture table from the exact recursion, the simulator and
the solve-based corollary, then runs the remaining report fragments and
merges them in a fixed order.
"""

from concurrent.futures import ThreadPoolExecutor, as_completed
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple
import logging
import time

from tqdm import tqdm

from ..absorption.coefficients import corollary_p1N
from ..core.types import STATE_R, TolerancePolicy, WalkConfig
from ..genfunc.values import GFMethod
from ..simulator.runs import run_finite_absorption
from . import checks
from .verdict import (
    CLAIM_RATIONAL_INTEGRAL,
    CLAIM_RECURSION,
    ConjectureRow,
    VerifyReport,
    decide_verdict,
)

logger = logging.getLogger(__name__)


def conjecture_row(N: int, recursion, tol: Optional[TolerancePolicy] = None, **quad_options) -> ConjectureRow:
    """One table row: exact recursion value, tier-0 simulation, tier-1 corollary"""
    outcome, _ = run_finite_absorption(WalkConfig.finite(N, 1, STATE_R), tol)
    value, report = corollary_p1N(N, GFMethod.SOLVE, tol, **quad_options)
    return ConjectureRow(N, recursion, outcome.p_left, value, report.status.value, outcome.converged)


def conjecture_verdict(N_range: Sequence[int], tol: Optional[TolerancePolicy] = None,
                       extra_tier_deltas: Optional[List[float]] = None, **quad_options) -> VerifyReport:
    """
    Conjecture table and verdict for the given N.

    Args:
        N_range: barriers to tabulate, each at least 2
        tol: tolerance policy
        extra_tier_deltas: further tier-0/tier-1 deltas to hold the verdict to

    Returns:
        VerifyReport: table, verdict and both N = 3 claims with citations
    """
    N_values = sorted(set(int(N) for N in N_range))
    if not N_values or N_values[0] < 2:
        raise ValueError(f"every N must be >= 2, got {list(N_range)}")
    recursion = checks.recursion_table(N_values)
    rows = [conjecture_row(N, recursion[N], tol, **quad_options) for N in N_values]
    decision = decide_verdict(rows, extra_tier_deltas)
    logger.info(f"verdict over N={N_values[0]}..{N_values[-1]}: {decision.verdict.value}")
    return VerifyReport(rows, decision, [CLAIM_RECURSION, CLAIM_RATIONAL_INTEGRAL])


class Verifier:
    """
    Full cross-method verification run.

    Fragments are independent; with more than one worker they run on a
    thread pool and are merged by name, so the report never depends on
    completion order.
    """

    def __init__(self, config: Optional[Any] = None, tol: Optional[TolerancePolicy] = None):
        """
        Initialize verifier.

        Args:
            config: Config object; the verify section supplies sample counts and seed
            tol: explicit tolerance policy, overriding the one derived from config
        """
        self.config = config
        self.logger = logging.getLogger(self.__class__.__name__)
        if tol is not None:
            self.tol = tol
        elif config is not None:
            self.tol = config.tolerance_policy()
        else:
            self.tol = TolerancePolicy()

        verify = config.verify if config is not None else None
        self.n_range: List[int] = list(verify.n_range) if verify else list(range(2, 11))
        self.seed: int = verify.seed if verify else checks.DEFAULT_SEED
        self.lambda_samples = verify.lambda_samples if verify else 1000
        self.flaw_samples = verify.flaw_samples if verify else 50
        self.lemma_samples = verify.lemma_samples if verify else 100
        self.f_audit_grid = verify.f_audit_grid if verify else 4096
        self.semi_t_max = verify.semi_t_max if verify else 2000
        self.workers = max(1, verify.workers) if verify else 1
        self.show_progress = verify.show_progress if verify else False

        self.quad_options: Dict[str, Any] = {}
        if config is not None:
            self.quad_options = {
                'base_grid': config.quadrature.base_grid,
                'growth_factor': config.quadrature.growth_factor,
                'degenerate_fraction': config.quadrature.degenerate_fraction,
            }

        # Statistics
        self.fragment_seconds: Dict[str, float] = {}

    def fragment_tasks(self) -> List[Tuple[str, Callable[[], Dict[str, Any]]]]:
        """Named fragment callables in report order"""
        tol, seed, quad = self.tol, self.seed, self.quad_options
        return [
            ('lambda_identity', lambda: checks.check_lambda_identities(self.lambda_samples, seed)),
            ('bc_checks', lambda: checks.boundary_condition_checks((3, 4, 5), self.lemma_samples, seed)),
            ('konno_flaw', lambda: checks.demonstrate_konno_flaw(self.flaw_samples, seed)),
            ('lemma_recursion', lambda: checks.lemma_checks((3, 4, 5, 8), self.lemma_samples, seed)),
            ('r13_poles', lambda: checks.analyze_r13_poles(tol, **quad)),
            ('F_audit', lambda: checks.audit_F_antiderivative(self.f_audit_grid)),
            ('parseval', lambda: checks.parseval_check((3, 4, 5), tol, **quad)),
            ('theorem_cross_check', lambda: checks.theorem_cross_check(5, (1, 2, 3), 20, seed, tol, **quad)),
            ('semi_infinite', lambda: checks.semi_infinite_check(self.semi_t_max, tol)),
            ('recursion_limit', lambda: checks.recursion_limit_fragment(max(200, max(self.n_range)))),
        ]

    def _timed(self, name: str, task: Callable[[], Dict[str, Any]]) -> Dict[str, Any]:
        started = time.perf_counter()
        result = task()
        self.fragment_seconds[name] = time.perf_counter() - started
        return result

    def run_fragments(self, names: Optional[Sequence[str]] = None) -> Dict[str, Dict[str, Any]]:
        """
        Compute the selected fragments (all by default).

        Returns:
            dict: fragment name -> findings, in report order
        """
        tasks = [(n, t) for n, t in self.fragment_tasks() if names is None or n in names]
        results: Dict[str, Dict[str, Any]] = {}

        if self.workers <= 1:
            for name, task in tqdm(tasks, desc="verify", disable=not self.show_progress):
                self.logger.info(f"Running fragment {name}")
                results[name] = self._timed(name, task)
        else:
            with ThreadPoolExecutor(max_workers=self.workers) as executor:
                future_to_name = {executor.submit(self._timed, name, task): name for name, task in tasks}
                for future in tqdm(as_completed(future_to_name), total=len(tasks), desc="verify",
                                   disable=not self.show_progress):
                    name = future_to_name[future]
                    results[name] = future.result()
                    self.logger.info(f"Fragment {name} finished")

        return {name: results[name] for name, _ in tasks}

    def run(self) -> VerifyReport:
        """
        Full VerifyReport: conjecture table, verdict and every fragment.

        Parseval and theorem cross-check deltas are tier-0/tier-1 comparisons
        and feed the verdict alongside the table.
        """
        self.logger.info(f"Starting verification over N={self.n_range} with seed {self.seed:#x}")
        fragments = self.run_fragments()

        extra: List[float] = []
        for name in ('parseval', 'theorem_cross_check'):
            fragment = fragments[name]
            if fragment.get('max_delta') is not None:
                extra.append(fragment['max_delta'])
            if not fragment.get('complete', True):
                extra.append(float('inf'))

        report = conjecture_verdict(self.n_range, self.tol, extra, **self.quad_options)
        report.fragments = fragments
        report.seed = self.seed
        self.logger.info(f"Verification finished: {report.verdict.value}")
        return report

    def get_statistics(self) -> Dict[str, Any]:
        return {'fragment_seconds': dict(self.fragment_seconds)}
