"""
Midpoint quadrature on the periodic interval [0, 2pi)

Nodes theta_j = 2pi (j + 1/2 + shift) / M. The grid doubles from the base
size until successive estimates agree, until two doublings in a row grow the
estimate by more than the growth factor, or until the doubling budget runs
out. A spent budget is followed by a search for a non-integrable singularity
on the contour; poles are detected, never regularized.
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Callable, Dict, List, Optional, Tuple
import logging
import math

import numpy as np

from ..core.errors import DegeneratePoint
from ..core.types import TolerancePolicy

logger = logging.getLogger(__name__)

TWO_PI = 2.0 * math.pi
BASE_GRID = 64
GROWTH_FACTOR = 10.0
DEGENERATE_FRACTION = 0.01
RETRY_SHIFT = 0.25
DIVERGENCE_EVENTS = 2

# peak refinement and the distances sampled around it
ZOOM_STEPS = 12
ZOOM_POINTS = 41
APPROACH_DISTANCES = (1e-4, 1e-5, 1e-6)


class QuadStatus(str, Enum):
    CONVERGED = "Converged"
    DIVERGED = "Diverged"
    DEGENERATE_NODES = "DegenerateNodes"
    EXHAUSTED = "Exhausted"


@dataclass
class QuadratureReport:
    """Outcome of one periodic quadrature; value is the integral over [0, 2pi)"""
    value: complex
    grid_size: int
    error_estimate: float
    status: QuadStatus
    history: List[complex] = field(default_factory=list)
    retried_offset: bool = False
    singular_angle: Optional[float] = None

    @property
    def converged(self) -> bool:
        return self.status is QuadStatus.CONVERGED

    @property
    def mean(self) -> complex:
        """value / 2pi"""
        return self.value / TWO_PI

    def to_dict(self) -> Dict[str, Any]:
        return {
            'value': self.value,
            'grid_size': self.grid_size,
            'error_estimate': self.error_estimate,
            'status': self.status.value,
            'doublings': max(len(self.history) - 1, 0),
            'retried_offset': self.retried_offset,
            'singular_angle': self.singular_angle,
        }


def midpoint_nodes(M: int, shift: float = 0.0) -> np.ndarray:
    return TWO_PI * (np.arange(M) + 0.5 + shift) / M


def _evaluate(integrand: Callable, theta: np.ndarray, vectorized: bool) -> np.ndarray:
    if vectorized:
        try:
            return np.asarray(integrand(theta), dtype=np.complex128).reshape(theta.shape)
        except DegeneratePoint:
            logger.debug("vectorized integrand raised DegeneratePoint; evaluating node by node")
    values = np.empty(theta.shape, dtype=np.complex128)
    for j, t in enumerate(theta):
        try:
            values[j] = complex(integrand(float(t)))
        except DegeneratePoint:
            values[j] = np.nan
    return values


def _magnitudes(integrand: Callable, theta: np.ndarray, vectorized: bool) -> np.ndarray:
    """|integrand| with undefined points read as +inf"""
    with np.errstate(all='ignore'):
        magnitude = np.abs(_evaluate(integrand, theta, vectorized))
    return np.where(np.isfinite(magnitude), magnitude, np.inf)


def _rule(integrand: Callable, M: int, vectorized: bool,
          degenerate_fraction: float) -> Tuple[complex, np.ndarray, np.ndarray, int, bool]:
    """(estimate, nodes, values, undefined node count, retried) for one grid"""
    nodes = midpoint_nodes(M)
    with np.errstate(all='ignore'):
        values = _evaluate(integrand, nodes, vectorized)
    finite = np.isfinite(values)
    bad = int(np.count_nonzero(~finite))
    retried = False
    if bad > 0:
        retried = True
        logger.info(f"{bad} non-finite nodes at M={M}; retrying with shifted grid")
        nodes = midpoint_nodes(M, RETRY_SHIFT)
        with np.errstate(all='ignore'):
            values = _evaluate(integrand, nodes, vectorized)
        finite = np.isfinite(values)
        bad = int(np.count_nonzero(~finite))
    if bad > degenerate_fraction * M:
        return complex(np.nan, np.nan), nodes, values, bad, retried
    if bad:
        logger.warning(f"{bad} undefined nodes left out at M={M}")
    with np.errstate(all='ignore'):
        estimate = complex(np.sum(values[finite]) * (TWO_PI / M))
    return estimate, nodes, values, bad, retried


def locate_peak(integrand: Callable, nodes: np.ndarray, values: np.ndarray,
                vectorized: bool = True) -> Tuple[float, float]:
    """
    Angle and magnitude of the largest integrand value near the grid.

    Starts at the largest node and zooms in tenfold per step. An undefined
    point counts as an infinite peak and ends the search.
    """
    magnitude = np.where(np.isfinite(values), np.abs(values), np.inf)
    j = int(np.argmax(magnitude))
    center, peak = float(nodes[j]), float(magnitude[j])
    width = TWO_PI / len(nodes)
    for _ in range(ZOOM_STEPS):
        if not math.isfinite(peak):
            break
        theta = center + np.linspace(-width, width, ZOOM_POINTS)
        local = _magnitudes(integrand, theta, vectorized)
        k = int(np.argmax(local))
        if local[k] > peak:
            center, peak = float(theta[k]), float(local[k])
        width /= 10.0
    return center % TWO_PI, peak


def blows_up_at(integrand: Callable, angle: float, growth_factor: float = GROWTH_FACTOR,
                vectorized: bool = True) -> bool:
    """
    True when |integrand| grows by more than growth_factor per tenfold
    approach to angle, twice in a row.

    A 1/d^2 pole grows a hundredfold per decade; integrable singularities
    such as 1/sqrt(d) grow about threefold.
    """
    theta = np.array([angle + side * d for d in APPROACH_DISTANCES for side in (-1.0, 1.0)])
    envelope = _magnitudes(integrand, theta, vectorized).reshape(-1, 2).max(axis=1)
    with np.errstate(all='ignore'):
        ratios = envelope[1:] / envelope[:-1]
    return bool(np.all(ratios > growth_factor))


def circle_quadrature(integrand: Callable, tol: Optional[TolerancePolicy] = None,
                      base_grid: int = BASE_GRID, growth_factor: float = GROWTH_FACTOR,
                      degenerate_fraction: float = DEGENERATE_FRACTION,
                      vectorized: bool = True) -> QuadratureReport:
    """
    Integrate a function of theta over [0, 2pi).

    Args:
        integrand: maps theta (array when vectorized, else float) to values;
            NaN/Inf or a DegeneratePoint marks an undefined node
        tol: quad_tol and max_grid_doublings
        base_grid: nodes on the first grid
        growth_factor: |Q_2M| / |Q_M| ratio that counts as a blow-up
        degenerate_fraction: share of undefined nodes tolerated after the retry;
            tolerated nodes are left out of the sum
        vectorized: call the integrand once per grid

    Returns:
        QuadratureReport: Converged when successive grids differ by < quad_tol;
        Diverged after two successive blow-ups, or when the spent budget
        is explained by a non-integrable singularity (singular_angle set);
        DegenerateNodes when too many nodes stay undefined;
        Exhausted otherwise.
    """
    tol = tol or TolerancePolicy()
    history: List[complex] = []
    retried_any = False
    blowups = 0
    M = base_grid
    error = math.inf
    nodes = values = np.empty(0)

    for level in range(tol.max_grid_doublings + 1):
        M = base_grid * 2 ** level
        estimate, nodes, values, bad, retried = _rule(integrand, M, vectorized, degenerate_fraction)
        retried_any = retried_any or retried

        if bad > degenerate_fraction * M:
            logger.warning(f"{bad}/{M} nodes undefined after offset retry")
            return QuadratureReport(complex(np.nan, np.nan), M, math.inf, QuadStatus.DEGENERATE_NODES,
                                    history, retried_any)
        if not (math.isfinite(estimate.real) and math.isfinite(estimate.imag)):
            logger.warning(f"estimate overflowed at M={M}")
            break

        if history:
            previous = history[-1]
            history.append(estimate)
            error = abs(estimate - previous)
            if error < tol.quad_tol:
                return QuadratureReport(estimate, M, error, QuadStatus.CONVERGED, history, retried_any)
            if abs(estimate) > growth_factor * max(abs(previous), tol.quad_tol):
                blowups += 1
                if blowups >= DIVERGENCE_EVENTS:
                    logger.warning(f"quadrature diverging: |Q| grew more than {growth_factor:g}x "
                                   f"twice in a row, |Q|={abs(estimate):.3e} at M={M}")
                    return QuadratureReport(estimate, M, error, QuadStatus.DIVERGED, history, retried_any)
            else:
                blowups = 0
        else:
            history.append(estimate)

    last = history[-1] if history else complex(np.nan, np.nan)
    angle, peak = locate_peak(integrand, nodes, values, vectorized)
    if blows_up_at(integrand, angle, growth_factor, vectorized):
        logger.warning(f"non-integrable singularity on the contour at theta={angle:.12f} "
                       f"(|f| up to {peak:.3e}); last estimate {abs(last):.3e} at M={M}")
        return QuadratureReport(last, M, error, QuadStatus.DIVERGED, history, retried_any, angle)

    logger.warning(f"quadrature exhausted {tol.max_grid_doublings} doublings, last change {error:.3e}")
    return QuadratureReport(last, M, error, QuadStatus.EXHAUSTED, history, retried_any)
