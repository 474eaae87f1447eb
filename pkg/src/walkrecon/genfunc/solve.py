"""
Boundary-value solve of the generating-function recursion

Unknowns p_2..p_(N-1) and r_1..r_(N-2) of

    p_k = a z p_(k-1) + c z r_(k-1)      k = 2..N-1
    r_k = b z p_(k+1) + d z r_(k+1)      k = 1..N-2

with p_1 = z and r_(N-1) = 0 substituted. The dense 2(N-2) system is
assembled for a whole batch of z at once and solved with numpy.linalg.
"""

from typing import List, Optional, Tuple
import logging

import numpy as np

from ..core.errors import DegeneratePoint, InvalidConfiguration, SingularSystem
from ..core.types import CoinOperator, as_scalar, hadamard_coin
from .values import GFMethod, GFValue

logger = logging.getLogger(__name__)

CONDITION_LIMIT = 1e12
POST_SOLVE_TOL = 1e-12


def _p_index(k: int) -> int:
    return k - 2


def _r_index(k: int, N: int) -> int:
    return (N - 2) + (k - 1)


def assemble_system(z: np.ndarray, N: int, coin: CoinOperator) -> Tuple[np.ndarray, np.ndarray]:
    """
    Batched matrices and right-hand sides, shapes (M, n, n) and (M, n), n = 2(N-2).
    """
    z = np.asarray(z, dtype=np.complex128).reshape(-1)
    M = z.shape[0]
    n = 2 * (N - 2)
    A = np.zeros((M, n, n), dtype=np.complex128)
    rhs = np.zeros((M, n), dtype=np.complex128)
    a, b, c, d = coin.a, coin.b, coin.c, coin.d

    row = 0
    for k in range(2, N):
        A[:, row, _p_index(k)] = 1.0
        if k - 1 == 1:
            rhs[:, row] += a * z * z
        else:
            A[:, row, _p_index(k - 1)] -= a * z
        A[:, row, _r_index(k - 1, N)] -= c * z
        row += 1

    for k in range(1, N - 1):
        A[:, row, _r_index(k, N)] = 1.0
        A[:, row, _p_index(k + 1)] -= b * z
        if k + 1 <= N - 2:
            A[:, row, _r_index(k + 1, N)] -= d * z
        row += 1

    return A, rhs


def solve_pr_array(z: np.ndarray, N: int, coin: Optional[CoinOperator] = None,
                   strict: bool = True) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    """
    Solve the recursion for every z in a batch.

    Args:
        z: complex array of shape (M,)
        N: right barrier, at least 2
        coin: coin operator, Hadamard when omitted
        strict: raise SingularSystem on the first ill-conditioned point;
            otherwise return NaN rows there

    Returns:
        tuple: (p, r, condition), p and r of shape (M, N-1) indexed by k-1
    """
    if N < 2:
        raise InvalidConfiguration(f"N must be >= 2, got {N}")
    coin = coin or hadamard_coin()
    z = np.asarray(z, dtype=np.complex128).reshape(-1)
    M = z.shape[0]
    p = np.zeros((M, N - 1), dtype=np.complex128)
    r = np.zeros((M, N - 1), dtype=np.complex128)
    p[:, 0] = z

    if N == 2:
        return p, r, np.ones(M)

    A, rhs = assemble_system(z, N, coin)
    with np.errstate(divide='ignore', invalid='ignore'):
        condition = np.linalg.cond(A)
    condition = np.where(np.isfinite(condition), condition, np.inf)
    bad = condition > CONDITION_LIMIT

    if np.any(bad):
        first = int(np.argmax(bad))
        if strict:
            raise SingularSystem(complex(z[first]), float(condition[first]))
        logger.info(f"{int(bad.sum())} of {M} points ill-conditioned for N={N}; marked NaN")
        A[bad] = np.eye(A.shape[1])
        rhs[bad] = 0.0

    x = np.linalg.solve(A, rhs[..., None])[..., 0]

    residual = np.max(np.abs(np.einsum('mij,mj->mi', A, x) - rhs), axis=1)
    scale = 1.0 + np.max(np.abs(x), axis=1)
    loose = (~bad) & (residual > POST_SOLVE_TOL * scale)
    if np.any(loose):
        logger.warning(f"post-solve residual {float(np.max(residual[loose])):.3e} above "
                       f"{POST_SOLVE_TOL:.0e} for N={N}")

    n_p = N - 2
    p[:, 1:] = x[:, :n_p]
    r[:, :N - 2] = x[:, n_p:]
    if np.any(bad):
        p[bad] = np.nan
        r[bad] = np.nan
    return p, r, condition


def solve_gf(z: complex, N: int, coin: Optional[CoinOperator] = None) -> List[GFValue]:
    """
    Trusted generating-function values p_k^N(z), r_k^N(z) for k = 1..N-1.

    Args:
        z: nonzero complex point
        N: right barrier, at least 2
        coin: coin operator, Hadamard when omitted

    Returns:
        list: GFValue per k, method SOLVE

    Raises:
        SingularSystem: condition estimate above 1e12
    """
    z = as_scalar(z, 'z')
    if z == 0:
        raise DegeneratePoint(z, "z = 0")
    p, r, _ = solve_pr_array(np.array([z]), N, coin, strict=True)
    return [GFValue(complex(p[0, k - 1]), complex(r[0, k - 1]), z, N, k, GFMethod.SOLVE)
            for k in range(1, N)]
