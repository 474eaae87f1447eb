"""
Generating functions evaluated from simulated hitting streams

A finite run started from |L> has left-boundary L-component hits with
generating function a p + c r; started from |R> they give b p + d r.
Inverting this with the coin, [p; r] = conj(U) [f_L; f_R], recovers the
power-series coefficients of p_k^N and r_k^N from two simulations.
"""

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence, Union
import logging
import math

import numpy as np

from ..core.errors import ConvergenceError, InvalidConfiguration
from ..core.types import STATE_L, STATE_R, CoinOperator, TolerancePolicy, WalkConfig, as_scalar, hadamard_coin
from ..simulator.runs import HittingRecord, HittingSeries, run_finite_absorption
from .solve import solve_pr_array

logger = logging.getLogger(__name__)


@dataclass
class SeriesPR:
    """Power-series coefficients of p_k^N and r_k^N, indexed by the power of z"""
    p: np.ndarray
    r: np.ndarray
    survival: float
    N: int
    k: int

    def evaluate(self, z: complex) -> tuple:
        powers = complex(z) ** np.arange(len(self.p))
        return complex(np.dot(self.p, powers)), complex(np.dot(self.r, powers))

    @property
    def r_square_sum(self) -> float:
        return float(np.sum(np.abs(self.r) ** 2))

    @property
    def p_square_sum(self) -> float:
        return float(np.sum(np.abs(self.p) ** 2))


def series_tail_bound(survival: float, z: complex, last_time: int, weight_norm: float = 1.0) -> float:
    """Cauchy-Schwarz bound on the omitted terms n > last_time"""
    rho = abs(z)
    return weight_norm * math.sqrt(max(survival, 0.0)) * rho ** (last_time + 1) / math.sqrt(1.0 - rho ** 2)


def gf_from_series(hits: Union[HittingSeries, Iterable[HittingRecord]], z: complex,
                   component_weights: Sequence[complex] = (1.0, 0.0),
                   tol: Optional[TolerancePolicy] = None,
                   survival: Optional[float] = None) -> complex:
    """
    Evaluate sum_n <weights, amplitude_n> z^n over a hitting stream.

    Args:
        hits: a HittingSeries or any iterable of HittingRecords in time order
        z: point with |z| < 1
        component_weights: weights applied to the (L, R) amplitude components
        tol: tolerance policy; quad_tol bounds the truncation tail
        survival: norm left when the stream stopped; taken from a
            HittingSeries when omitted, else 0

    Raises:
        ConvergenceError: tail bound above quad_tol
    """
    z = as_scalar(z, 'z')
    if abs(z) >= 1.0:
        raise InvalidConfiguration(f"series evaluation needs |z| < 1, got |z|={abs(z)!r}")
    tol = tol or TolerancePolicy()
    weights = np.asarray(component_weights, dtype=np.complex128)

    if isinstance(hits, HittingSeries):
        times, amps = hits.times, hits.amplitudes
        if survival is None:
            survival = hits.survival
    else:
        records = list(hits)
        times = np.array([rec.time for rec in records], dtype=np.int64)
        amps = np.array([rec.amplitude for rec in records], dtype=np.complex128).reshape(-1, 2)
    if survival is None:
        survival = 0.0
    if times.shape[0] == 0:
        return 0j

    tail = series_tail_bound(survival, z, int(times[-1]), float(np.linalg.norm(weights)))
    if tail > tol.quad_tol:
        raise ConvergenceError(tail, tol.quad_tol)
    return complex(np.sum((amps @ weights) * z ** times))


def series_pr(N: int, k: int = 1, coin: Optional[CoinOperator] = None,
              tol: Optional[TolerancePolicy] = None) -> SeriesPR:
    """
    Recover p_k^N and r_k^N coefficients from the |L> and |R> runs.

    Args:
        N: right barrier
        k: start site
        coin: coin operator, Hadamard when omitted
        tol: tolerance policy for both runs

    Returns:
        SeriesPR: dense coefficient arrays of common length
    """
    coin = coin or hadamard_coin()
    _, from_l = run_finite_absorption(WalkConfig.finite(N, k, STATE_L, coin), tol)
    _, from_r = run_finite_absorption(WalkConfig.finite(N, k, STATE_R, coin), tol)
    length = max(from_l.left.last_time, from_r.left.last_time) + 1
    f_l = from_l.left.dense(length)[:, 0]
    f_r = from_r.left.dense(length)[:, 0]
    u = np.conj(coin.matrix)
    p = u[0, 0] * f_l + u[0, 1] * f_r
    r = u[1, 0] * f_l + u[1, 1] * f_r
    survival = max(from_l.left.survival, from_r.left.survival)
    return SeriesPR(p, r, survival, N, k)


def component_mapping_residual(N: int, k: int, z: complex, coin: Optional[CoinOperator] = None,
                               tol: Optional[TolerancePolicy] = None) -> float:
    """
    Max |series - (a p + c r, b p + d r)| at z, series from the simulator and
    p, r from the boundary-value solve.
    """
    coin = coin or hadamard_coin()
    p, r, _ = solve_pr_array(np.array([complex(z)]), N, coin)
    p_k, r_k = complex(p[0, k - 1]), complex(r[0, k - 1])
    expected_l = coin.a * p_k + coin.c * r_k
    expected_r = coin.b * p_k + coin.d * r_k

    _, from_l = run_finite_absorption(WalkConfig.finite(N, k, STATE_L, coin), tol)
    _, from_r = run_finite_absorption(WalkConfig.finite(N, k, STATE_R, coin), tol)
    got_l = gf_from_series(from_l.left, z, (1.0, 0.0), tol)
    got_r = gf_from_series(from_r.left, z, (1.0, 0.0), tol)
    residual = max(abs(got_l - expected_l), abs(got_r - expected_r))
    logger.debug(f"component mapping N={N} k={k} z={z}: residual {residual:.3e}")
    return residual
