"""
Generating functions exactly as printed for the finite Hadamard walk

p_k = (z/2 + E_z) lambda_+^(k-1) + (z/2 - E_z) lambda_-^(k-1)
r_k = C_z (lambda_+^(k-N+1) - lambda_-^(k-N+1))

With D_m = lambda_+^m - lambda_-^m and S_m = lambda_+^m + lambda_-^m:

braces = D_(N-2)^2 - (z/sqrt 2) D_(N-2) D_(N-3) - (-1)^(N-3) D_1^2
C_z    = (z^2/sqrt 2) (-1)^(N-2) D_(N-3) / braces
E_z    = z / (2 D_(N-2)) * [ 2 (-1)^(N-3) D_1 D_(N-3) / braces + S_(N-2) ]

At N = 3 the braces vanish identically (D_0 = 0 and D_1^2 - D_1^2 = 0) and
the printed C_z is the 0 * inf product of a structurally zero factor with
the inverse braces. The printed factorization is followed: the zero factor
wins, C_z = 0, and the first summand of the E_z bracket drops.
"""

from dataclasses import dataclass
from typing import Optional, Tuple
import logging

import numpy as np

from ..core.errors import DegeneratePoint, InvalidConfiguration
from .lambdas import DEGENERACY_TOL, SQRT2, check_lambda_point, lambda_pm_array
from .values import GFMethod, GFValue

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class KonnoCoefficients:
    C_z: complex
    E_z: complex
    braces: complex
    braces_vanish: bool = False


def _check_range(N: int, k: Optional[int] = None) -> None:
    if N < 3:
        raise InvalidConfiguration(f"the printed formulas need N >= 3, got {N}")
    if k is not None and not 1 <= k <= N - 1:
        raise InvalidConfiguration(f"k must lie in 1..{N - 1}, got {k}")


def konno_coefficients_array(z: np.ndarray, N: int, branch: int = 1):
    """
    Vectorized (C, E, braces, lambda_+, lambda_-).

    NaN marks entries where a printed denominator vanishes; at N = 3 the
    braces are structurally zero and never mark an entry.
    """
    _check_range(N)
    z = np.asarray(z, dtype=np.complex128)
    lp, lm = lambda_pm_array(z, branch)

    d1 = lp - lm
    d2 = lp ** (N - 2) - lm ** (N - 2)
    d3 = lp ** (N - 3) - lm ** (N - 3)
    s2 = lp ** (N - 2) + lm ** (N - 2)
    sign2 = (-1.0) ** (N - 2)
    sign3 = (-1.0) ** (N - 3)

    braces = d2 ** 2 - (z / SQRT2) * d2 * d3 - sign3 * d1 ** 2
    bad_d2 = ~np.isfinite(d2) | (np.abs(d2) < DEGENERACY_TOL)
    safe_d2 = np.where(bad_d2, 1.0, d2)

    if N == 3:
        C = np.zeros_like(z)
        E = z / (2.0 * safe_d2) * s2
        bad = bad_d2
    else:
        bad_braces = ~np.isfinite(braces) | (np.abs(braces) < DEGENERACY_TOL)
        safe_braces = np.where(bad_braces, 1.0, braces)
        C = (z ** 2 / SQRT2) * sign2 * d3 / safe_braces
        E = z / (2.0 * safe_d2) * (2.0 * sign3 * d1 * d3 / safe_braces + s2)
        bad = bad_d2 | bad_braces

    C = np.where(bad, np.nan + 0j, C)
    E = np.where(bad, np.nan + 0j, E)
    return C, E, braces, lp, lm


def konno_pr_array(z: np.ndarray, N: int, k: int, branch: int = 1) -> Tuple[np.ndarray, np.ndarray]:
    """Vectorized (p_k, r_k) per the printed equations; NaN at degenerate z"""
    _check_range(N, k)
    z = np.asarray(z, dtype=np.complex128)
    C, E, _, lp, lm = konno_coefficients_array(z, N, branch)
    p = (z / 2.0 + E) * lp ** (k - 1) + (z / 2.0 - E) * lm ** (k - 1)
    r = C * (lp ** (k - N + 1) - lm ** (k - N + 1))
    return p, r


def konno_coefficients(z: complex, N: int, branch: int = 1) -> KonnoCoefficients:
    """
    C_z and E_z as printed, sign factors included.

    Raises:
        DegeneratePoint: z invalid for lambda_pm or a printed denominator vanishes
    """
    _check_range(N)
    z = check_lambda_point(z)
    C, E, braces, _, _ = konno_coefficients_array(np.array([z]), N, branch)
    if not (np.isfinite(C[0]) and np.isfinite(E[0])):
        raise DegeneratePoint(z, f"printed denominator vanishes for N={N}")
    if N == 3:
        logger.debug(f"braces vanish at N=3 (|braces|={abs(braces[0]):.3e}); C_z taken as 0")
    return KonnoCoefficients(complex(C[0]), complex(E[0]), complex(braces[0]), braces_vanish=(N == 3))


def konno_gf(z: complex, N: int, k: int, branch: int = 1) -> GFValue:
    """
    Evaluate the printed p_k^N(z), r_k^N(z).

    Args:
        z: complex point
        N: right barrier, at least 3
        k: start site in 1..N-1
        branch: square-root branch for lambda_pm

    Returns:
        GFValue: method KONNO
    """
    _check_range(N, k)
    konno_coefficients(z, N, branch)
    p, r = konno_pr_array(np.array([complex(z)]), N, k, branch)
    return GFValue(complex(p[0]), complex(r[0]), complex(z), N, k, GFMethod.KONNO)
