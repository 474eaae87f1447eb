"""
Recursion and boundary-condition residuals for any generating-function method
"""

from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Sequence, Tuple, Union
import logging

import numpy as np

from ..core.errors import DegeneratePoint, InvalidConfiguration
from ..core.types import CoinOperator, hadamard_coin
from .konno import konno_gf, konno_pr_array
from .lambdas import check_lambda_point
from .lemma import lemma_gf, lemma_pr_array
from .solve import solve_gf, solve_pr_array
from .values import GFMethod, GFValue

logger = logging.getLogger(__name__)


@dataclass
class ResidualReport:
    """Max residuals of the p/r equations and both boundary conditions"""
    max_p_residual: float
    max_r_residual: float
    bc_p1_residual: float
    bc_rN1_residual: float
    sample_points: List[complex] = field(default_factory=list)
    method: GFMethod = GFMethod.SOLVE
    N: int = 0

    @property
    def max_residual(self) -> float:
        return max(self.max_p_residual, self.max_r_residual, self.bc_p1_residual, self.bc_rN1_residual)

    def to_dict(self) -> Dict[str, Any]:
        return {
            'method': self.method.value,
            'N': self.N,
            'max_p_residual': self.max_p_residual,
            'max_r_residual': self.max_r_residual,
            'bc_p1_residual': self.bc_p1_residual,
            'bc_rN1_residual': self.bc_rN1_residual,
            'sample_points': list(self.sample_points),
        }


def gf_table(method: Union[GFMethod, str], z: np.ndarray, N: int,
             coin: Optional[CoinOperator] = None, branch: int = 1) -> Tuple[np.ndarray, np.ndarray]:
    """
    p and r for k = 1..N-1 at every z, shapes (M, N-1).

    Lemma and Konno are the Hadamard closed forms; the coin argument only
    reaches the solve.
    """
    method = GFMethod.parse(method)
    z = np.asarray(z, dtype=np.complex128).reshape(-1)
    if method is GFMethod.SOLVE:
        p, r, _ = solve_pr_array(z, N, coin, strict=False)
        return p, r
    if method is GFMethod.LEMMA:
        evaluate = lemma_pr_array
    elif method is GFMethod.KONNO:
        evaluate = konno_pr_array
    else:
        raise ValueError(f"no closed-form table for method {method.value!r}")
    columns = [evaluate(z, N, k, branch) for k in range(1, N)]
    p = np.stack([c[0] for c in columns], axis=1)
    r = np.stack([c[1] for c in columns], axis=1)
    return p, r


def recursion_residual(method: Union[GFMethod, str], z: Union[complex, Sequence[complex]], N: int,
                       coin: Optional[CoinOperator] = None) -> ResidualReport:
    """
    Evaluate every recursion equation and both boundary conditions.

    Args:
        method: LEMMA, KONNO or SOLVE
        z: one point or a sequence of sample points
        N: right barrier
        coin: coin for the recursion coefficients, Hadamard when omitted

    Returns:
        ResidualReport: maxima over all sample points

    Raises:
        DegeneratePoint: a sample point where the method is undefined
    """
    method = GFMethod.parse(method)
    coin = coin or hadamard_coin()
    points = [complex(z)] if np.isscalar(z) else [complex(v) for v in z]
    for point in points:
        check_lambda_point(point)
    zs = np.array(points, dtype=np.complex128)

    p, r = gf_table(method, zs, N, coin)
    if not (np.all(np.isfinite(p)) and np.all(np.isfinite(r))):
        bad = int(np.argmax(~(np.isfinite(p).all(axis=1) & np.isfinite(r).all(axis=1))))
        raise DegeneratePoint(points[bad], f"{method.value} values undefined for N={N}")

    zc = zs[:, None]
    a, b, c, d = coin.a, coin.b, coin.c, coin.d
    # p_k - a z p_(k-1) - c z r_(k-1), k = 2..N-1
    p_res = np.abs(p[:, 1:] - a * zc * p[:, :-1] - c * zc * r[:, :-1])
    # r_k - b z p_(k+1) - d z r_(k+1), k = 1..N-2
    r_res = np.abs(r[:, :-1] - b * zc * p[:, 1:] - d * zc * r[:, 1:])

    report = ResidualReport(
        max_p_residual=float(p_res.max()) if p_res.size else 0.0,
        max_r_residual=float(r_res.max()) if r_res.size else 0.0,
        bc_p1_residual=float(np.max(np.abs(p[:, 0] - zs))),
        bc_rN1_residual=float(np.max(np.abs(r[:, -1]))),
        sample_points=points,
        method=method,
        N=N,
    )
    logger.debug(f"{method.value} N={N}: max residual {report.max_residual:.3e} over {len(points)} points")
    return report


def evaluate_gf(method: Union[GFMethod, str], z: complex, N: int, k: int,
                coin: Optional[CoinOperator] = None) -> GFValue:
    """Single GFValue by method name; SERIES is not addressable by z alone"""
    method = GFMethod.parse(method)
    if method is GFMethod.LEMMA:
        return lemma_gf(z, N, k)
    if method is GFMethod.KONNO:
        return konno_gf(z, N, k)
    if method is GFMethod.SOLVE:
        if not 1 <= k <= N - 1:
            raise InvalidConfiguration(f"k must lie in 1..{N - 1}, got {k}")
        return solve_gf(z, N, coin)[k - 1]
    raise ValueError(f"method {method.value!r} needs a hitting stream; use gf_from_series")
