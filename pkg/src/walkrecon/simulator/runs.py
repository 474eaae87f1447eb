"""
Absorption runs with boundary measurement

After every full step the amplitude sitting on an absorbing site is
removed; its squared norm accumulates into the absorption probability
and the removed 2-vector is kept as a hitting record. Nothing is absorbed
at time 0 since the start site is interior.
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, Iterator, List, Optional, Tuple
import logging

import numpy as np

from ..core.errors import CapacityError, InvalidConfiguration
from ..core.types import TolerancePolicy, WalkConfig
from .walk import propagate

logger = logging.getLogger(__name__)

ACCOUNTING_TOL = 1e-10
DEFAULT_MAX_LATTICE_SITES = 10_000_000


class BoundarySite(str, Enum):
    LEFT = "left"
    RIGHT = "right"


@dataclass(frozen=True)
class HittingRecord:
    """Amplitude removed at a boundary at a given time"""
    time: int
    site: BoundarySite
    amplitude: Tuple[complex, complex]

    @property
    def probability(self) -> float:
        return abs(self.amplitude[0]) ** 2 + abs(self.amplitude[1]) ** 2

    def to_dict(self) -> Dict[str, Any]:
        return {'time': self.time, 'site': self.site.value, 'amplitude': list(self.amplitude)}


class HittingSeries:
    """
    Hitting records at one boundary, stored column-wise.

    Only non-zero hits are kept. ``survival`` is the squared norm left on
    the lattice when the run stopped; it bounds every later coefficient.
    """

    def __init__(self, site: BoundarySite, times: List[int], amplitudes: List[Tuple[complex, complex]],
                 survival: float = 0.0):
        self.site = site
        self.times = np.asarray(times, dtype=np.int64)
        self.amplitudes = np.asarray(amplitudes, dtype=np.complex128).reshape(-1, 2)
        self.survival = float(survival)

    def __len__(self) -> int:
        return int(self.times.shape[0])

    def __iter__(self) -> Iterator[HittingRecord]:
        for t, amp in zip(self.times, self.amplitudes):
            yield HittingRecord(int(t), self.site, (complex(amp[0]), complex(amp[1])))

    def records(self) -> List[HittingRecord]:
        return list(self)

    @property
    def total_probability(self) -> float:
        return float(np.sum(np.abs(self.amplitudes) ** 2))

    @property
    def last_time(self) -> int:
        return int(self.times[-1]) if len(self) else 0

    def dense(self, length: Optional[int] = None) -> np.ndarray:
        """Coefficient array of shape (length, 2) indexed by time, zero where nothing hit"""
        length = self.last_time + 1 if length is None else length
        out = np.zeros((length, 2), dtype=np.complex128)
        keep = self.times < length
        out[self.times[keep]] = self.amplitudes[keep]
        return out


@dataclass
class HittingStream:
    """Both boundaries of one run; iteration yields records in (time, site) order"""
    left: HittingSeries
    right: HittingSeries

    def __iter__(self) -> Iterator[HittingRecord]:
        merged = list(self.left) + list(self.right)
        return iter(sorted(merged, key=lambda rec: (rec.time, rec.site is BoundarySite.RIGHT)))


@dataclass(frozen=True)
class AbsorptionOutcome:
    """Absorption probabilities P_k^N(phi) measured by time evolution"""
    p_left: float
    p_right: float
    survival: float
    steps_used: int
    converged: bool
    p_left_half: Optional[float] = None
    extrapolated: Optional[float] = None
    metadata: Dict[str, Any] = field(default_factory=dict)

    @property
    def accounting_residual(self) -> float:
        return abs(self.p_left + self.p_right + self.survival - 1.0)

    def to_dict(self) -> Dict[str, Any]:
        result = {
            'p_left': self.p_left,
            'p_right': self.p_right,
            'survival': self.survival,
            'steps_used': self.steps_used,
            'converged': self.converged,
            'accounting_residual': self.accounting_residual,
        }
        if self.p_left_half is not None:
            result['p_left_half'] = self.p_left_half
        if self.extrapolated is not None:
            result['extrapolated'] = self.extrapolated
        result.update(self.metadata)
        return result


def _initial_lattice(sites: int, config: WalkConfig) -> Tuple[np.ndarray, np.ndarray]:
    psi = np.zeros((sites, 2), dtype=np.complex128)
    psi[config.start_k] = config.qubit.vector
    return psi, np.zeros_like(psi)


def _take(psi: np.ndarray, x: int) -> Tuple[complex, complex]:
    amp = (complex(psi[x, 0]), complex(psi[x, 1]))
    psi[x] = 0.0
    return amp


def run_finite_absorption(config: WalkConfig,
                          tol: Optional[TolerancePolicy] = None) -> Tuple[AbsorptionOutcome, HittingStream]:
    """
    Evolve on 0..N, absorbing at both ends until survival drops below tolerance.

    Args:
        config: walk with a finite boundary
        tol: tolerance policy (survival_tol, max_steps)

    Returns:
        tuple: (AbsorptionOutcome, HittingStream). ``converged`` is False when
        max_steps ran out first; the partial outcome is still returned.
    """
    if not config.boundary.is_finite:
        raise InvalidConfiguration("run_finite_absorption needs a finite boundary")
    tol = tol or TolerancePolicy()
    N = config.boundary.N
    psi, scratch = _initial_lattice(N + 1, config)

    left_times: List[int] = []
    left_amps: List[Tuple[complex, complex]] = []
    right_times: List[int] = []
    right_amps: List[Tuple[complex, complex]] = []
    p_left = 0.0
    p_right = 0.0
    survival = 1.0
    converged = False
    steps = 0

    for steps in range(1, tol.max_steps + 1):
        propagate(psi, scratch, config.coin, N)
        psi, scratch = scratch, psi

        hit = _take(psi, 0)
        weight = abs(hit[0]) ** 2 + abs(hit[1]) ** 2
        if weight > 0.0:
            left_times.append(steps)
            left_amps.append(hit)
            p_left += weight

        hit = _take(psi, N)
        weight = abs(hit[0]) ** 2 + abs(hit[1]) ** 2
        if weight > 0.0:
            right_times.append(steps)
            right_amps.append(hit)
            p_right += weight

        survival = float(np.vdot(psi, psi).real)
        if survival < tol.survival_tol:
            converged = True
            break

    if not converged:
        logger.warning(f"Finite run N={N} k={config.start_k} stopped at max_steps={tol.max_steps} "
                       f"with survival {survival:.3e}")

    outcome = AbsorptionOutcome(p_left, p_right, survival, steps, converged)
    stream = HittingStream(
        HittingSeries(BoundarySite.LEFT, left_times, left_amps, survival),
        HittingSeries(BoundarySite.RIGHT, right_times, right_amps, survival),
    )
    return outcome, stream


def run_semi_infinite_absorption(config: WalkConfig, t_max: int,
                                 tol: Optional[TolerancePolicy] = None,
                                 max_sites: int = DEFAULT_MAX_LATTICE_SITES,
                                 extrapolate: bool = False) -> AbsorptionOutcome:
    """
    Evolve for t_max steps absorbing at site 0 only.

    The lattice 0..k+t_max+1 is wide enough that the front never reaches
    the artificial right edge, so the run is exact up to t_max.

    Args:
        config: walk with a semi-infinite boundary
        t_max: number of steps
        tol: tolerance policy; survival_tol judges the last-step increment
        max_sites: memory bound on the lattice
        extrapolate: add the Richardson estimate assuming an error ~ 1/t

    Returns:
        AbsorptionOutcome: survival is the squared norm still on the lattice,
        equal to 1 - p_left up to rounding; accounting_residual measures the
        difference. p_right is always 0.

    Raises:
        CapacityError: lattice larger than max_sites
    """
    if config.boundary.is_finite:
        raise InvalidConfiguration("run_semi_infinite_absorption needs a semi-infinite boundary")
    if int(t_max) != t_max or t_max < 1:
        raise InvalidConfiguration(f"t_max must be an integer >= 1, got {t_max!r}")
    tol = tol or TolerancePolicy()
    k = config.start_k
    x_max = k + t_max + 1
    if x_max + 1 > max_sites:
        raise CapacityError(x_max + 1, max_sites)

    psi, scratch = _initial_lattice(x_max + 1, config)
    t_half = t_max // 2
    p_left = 0.0
    p_left_half: Optional[float] = None
    increment = 0.0

    for t in range(1, t_max + 1):
        top = min(x_max, k + t)
        propagate(psi, scratch, config.coin, top)
        psi, scratch = scratch, psi
        hit = _take(psi, 0)
        increment = abs(hit[0]) ** 2 + abs(hit[1]) ** 2
        p_left += increment
        if t == t_half:
            p_left_half = p_left

    survival = float(np.vdot(psi, psi).real)
    converged = increment < tol.survival_tol

    extrapolated = None
    if extrapolate and p_left_half is not None and t_half > 0:
        extrapolated = (t_max * p_left - t_half * p_left_half) / (t_max - t_half)
        logger.debug(f"Richardson estimate from t={t_half},{t_max}: {extrapolated:.12f}")

    return AbsorptionOutcome(
        p_left, 0.0, survival, t_max, converged,
        p_left_half=p_left_half if extrapolate else None,
        extrapolated=extrapolated,
        metadata={'t_max': t_max, 'last_increment': increment},
    )


def hitting_amplitude_series(config: WalkConfig,
                             tol: Optional[TolerancePolicy] = None) -> List[HittingRecord]:
    """Left-boundary hitting records of a finite run, in time order"""
    _, stream = run_finite_absorption(config, tol)
    return stream.left.records()


def boundary_series(config: WalkConfig, tol: Optional[TolerancePolicy] = None) -> HittingSeries:
    """Left-boundary hitting series of a finite run, with the residual survival attached"""
    _, stream = run_finite_absorption(config, tol)
    return stream.left
