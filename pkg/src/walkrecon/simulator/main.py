"""
Walk simulator coordinating finite and semi-infinite absorption runs

Holds the tolerance policy and lattice bound taken from the configuration
and keeps simple run statistics for the report footer.
"""

from concurrent.futures import ThreadPoolExecutor
from typing import Any, Dict, List, Optional, Tuple
import logging
import time

from ..core.types import QubitState, STATE_R, TolerancePolicy, WalkConfig, CoinOperator
from .runs import (
    AbsorptionOutcome,
    DEFAULT_MAX_LATTICE_SITES,
    HittingSeries,
    HittingStream,
    run_finite_absorption,
    run_semi_infinite_absorption,
)

logger = logging.getLogger(__name__)


class WalkSimulator:
    """
    Time-domain oracle for absorption probabilities.

    Every public method is a pure function of its arguments and the
    policy fixed at construction, so batches may run on worker threads.
    """

    def __init__(self, config: Optional[Any] = None, tol: Optional[TolerancePolicy] = None):
        """
        Initialize simulator.

        Args:
            config: Config object; its simulation section supplies limits
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

        self.max_lattice_sites = DEFAULT_MAX_LATTICE_SITES
        self.workers = 1
        if config is not None:
            self.max_lattice_sites = config.simulation.max_lattice_sites
            self.workers = max(1, config.verify.workers)

        # Statistics
        self.runs_completed = 0
        self.total_steps = 0
        self.unconverged_runs = 0
        self.elapsed_seconds = 0.0

    def _record(self, outcome: AbsorptionOutcome, started: float) -> None:
        self.runs_completed += 1
        self.total_steps += outcome.steps_used
        if not outcome.converged:
            self.unconverged_runs += 1
        self.elapsed_seconds += time.perf_counter() - started

    def finite(self, N: int, k: int = 1, qubit: QubitState = STATE_R,
               coin: Optional[CoinOperator] = None) -> Tuple[AbsorptionOutcome, HittingStream]:
        """
        Run the walk between barriers at 0 and N.

        Args:
            N: right barrier
            k: start site
            qubit: initial coin state
            coin: coin operator, Hadamard when omitted

        Returns:
            tuple: (AbsorptionOutcome, HittingStream)
        """
        started = time.perf_counter()
        outcome, stream = run_finite_absorption(WalkConfig.finite(N, k, qubit, coin), self.tol)
        self._record(outcome, started)
        self.logger.debug(f"N={N} k={k}: p_left={outcome.p_left:.15f} after {outcome.steps_used} steps")
        return outcome, stream

    def p_left(self, N: int, k: int = 1, qubit: QubitState = STATE_R,
               coin: Optional[CoinOperator] = None) -> float:
        return self.finite(N, k, qubit, coin)[0].p_left

    def left_series(self, N: int, k: int = 1, qubit: QubitState = STATE_R,
                    coin: Optional[CoinOperator] = None) -> HittingSeries:
        return self.finite(N, k, qubit, coin)[1].left

    def semi_infinite(self, k: int = 1, qubit: QubitState = STATE_R, t_max: Optional[int] = None,
                      extrapolate: bool = False, coin: Optional[CoinOperator] = None) -> AbsorptionOutcome:
        """
        Run the walk with a single barrier at 0 for t_max steps.

        Args:
            k: start site
            qubit: initial coin state
            t_max: number of steps, defaulting to the configured semi_t_max
            extrapolate: attach the Richardson estimate
            coin: coin operator, Hadamard when omitted

        Returns:
            AbsorptionOutcome: p_right is always 0
        """
        if t_max is None:
            t_max = self.config.simulation.semi_t_max if self.config is not None else 10_000
        started = time.perf_counter()
        outcome = run_semi_infinite_absorption(
            WalkConfig.semi_infinite(k, qubit, coin), t_max, self.tol,
            max_sites=self.max_lattice_sites, extrapolate=extrapolate,
        )
        self._record(outcome, started)
        return outcome

    def batch_p_left(self, jobs: List[Tuple[int, int, QubitState]]) -> List[float]:
        """
        p_left for each (N, k, qubit) job, in job order.

        Uses a thread pool when more than one worker is configured; results
        are collected by index so the order never depends on scheduling.
        """
        if self.workers <= 1 or len(jobs) <= 1:
            return [self.p_left(N, k, q) for N, k, q in jobs]

        results: List[Optional[float]] = [None] * len(jobs)
        with ThreadPoolExecutor(max_workers=self.workers) as executor:
            futures = {executor.submit(self.p_left, N, k, q): i for i, (N, k, q) in enumerate(jobs)}
            for future, index in futures.items():
                results[index] = future.result()
        return [r for r in results if r is not None]

    def get_statistics(self) -> Dict[str, Any]:
        return {
            'runs_completed': self.runs_completed,
            'total_steps': self.total_steps,
            'unconverged_runs': self.unconverged_runs,
            'elapsed_seconds': self.elapsed_seconds,
        }
