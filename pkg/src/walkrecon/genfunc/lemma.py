"""
Closed-form generating functions with shared coefficients A_z, B_z

p_k = A lambda_+^(k-1) + B lambda_-^(k-1)
r_k = A lambda_+^(k+1) + B lambda_-^(k+1)
A = z lambda_-^N / (lambda_-^N - lambda_+^N),  B = z lambda_+^N / (lambda_+^N - lambda_-^N)

The coefficients are fixed by p_1 = z and r_(N-1) = 0. Whether the pair
also satisfies the coupled recursion is measured by recursion_residual,
not assumed here.
"""

from dataclasses import dataclass
from typing import Tuple

import numpy as np

from ..core.errors import DegeneratePoint, InvalidConfiguration
from .lambdas import DEGENERACY_TOL, check_lambda_point, lambda_pm_array
from .values import GFMethod, GFValue


@dataclass(frozen=True)
class LemmaCoefficients:
    A_z: complex
    B_z: complex


def _check_range(N: int, k: int) -> None:
    if N < 2:
        raise InvalidConfiguration(f"N must be >= 2, got {N}")
    if not 1 <= k <= N - 1:
        raise InvalidConfiguration(f"k must lie in 1..{N - 1}, got {k}")


def lemma_coefficients_array(z: np.ndarray, N: int, branch: int = 1) -> Tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
    """
    Vectorized (A, B, lambda_+, lambda_-); NaN where the denominator vanishes.
    """
    z = np.asarray(z, dtype=np.complex128)
    lp, lm = lambda_pm_array(z, branch)
    lpN = lp ** N
    lmN = lm ** N
    denom = lmN - lpN
    bad = ~np.isfinite(denom) | (np.abs(denom) < DEGENERACY_TOL)
    safe = np.where(bad, 1.0, denom)
    A = np.where(bad, np.nan + 0j, z * lmN / safe)
    B = np.where(bad, np.nan + 0j, -z * lpN / safe)
    return A, B, lp, lm


def lemma_pr_array(z: np.ndarray, N: int, k: int, branch: int = 1) -> Tuple[np.ndarray, np.ndarray]:
    """Vectorized (p_k, r_k); NaN at degenerate z"""
    _check_range(N, k)
    A, B, lp, lm = lemma_coefficients_array(z, N, branch)
    p = A * lp ** (k - 1) + B * lm ** (k - 1)
    r = A * lp ** (k + 1) + B * lm ** (k + 1)
    return p, r


def lemma_coefficients(z: complex, N: int, branch: int = 1) -> LemmaCoefficients:
    """
    A_z and B_z as printed.

    Raises:
        DegeneratePoint: z invalid for lambda_pm or |lambda_+^N - lambda_-^N| < 1e-12
    """
    if N < 2:
        raise InvalidConfiguration(f"N must be >= 2, got {N}")
    z = check_lambda_point(z)
    A, B, _, _ = lemma_coefficients_array(np.array([z]), N, branch)
    if not np.isfinite(A[0]):
        raise DegeneratePoint(z, f"lambda_+^{N} = lambda_-^{N}")
    return LemmaCoefficients(complex(A[0]), complex(B[0]))


def lemma_gf(z: complex, N: int, k: int, branch: int = 1) -> GFValue:
    """
    Evaluate the shared-coefficient closed form at z.

    Args:
        z: complex point
        N: right barrier
        k: start site in 1..N-1
        branch: square-root branch for lambda_pm

    Returns:
        GFValue: method LEMMA
    """
    _check_range(N, k)
    coeffs = lemma_coefficients(z, N, branch)
    z = complex(z)
    lp, lm = lambda_pm_array(np.array([z]), branch)
    lp, lm = complex(lp[0]), complex(lm[0])
    p = coeffs.A_z * lp ** (k - 1) + coeffs.B_z * lm ** (k - 1)
    r = coeffs.A_z * lp ** (k + 1) + coeffs.B_z * lm ** (k + 1)
    return GFValue(p, r, z, N, k, GFMethod.LEMMA)
