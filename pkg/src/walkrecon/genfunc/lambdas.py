"""
Characteristic values of the Hadamard recursion

lambda_pm(z) = (z^2 - 1 +/- sqrt(z^4 + 1)) / (sqrt(2) z), principal branch.
Both closed forms are built from these, and both are invariant under
swapping the two roots together with their coefficients.
"""

from dataclasses import dataclass
from typing import Tuple
import math

import numpy as np

from ..core.errors import DegeneratePoint, InvalidConfiguration
from ..core.types import as_scalar

DEGENERACY_TOL = 1e-12
SQRT2 = math.sqrt(2.0)


@dataclass(frozen=True)
class LambdaPair:
    lambda_plus: complex
    lambda_minus: complex

    @property
    def product(self) -> complex:
        return self.lambda_plus * self.lambda_minus

    @property
    def total(self) -> complex:
        return self.lambda_plus + self.lambda_minus

    def swapped(self) -> 'LambdaPair':
        return LambdaPair(self.lambda_minus, self.lambda_plus)


def degenerate_mask(z: np.ndarray) -> np.ndarray:
    """True where z = 0 or z^4 = -1 within tolerance"""
    z = np.asarray(z, dtype=np.complex128)
    return (np.abs(z) < DEGENERACY_TOL) | (np.abs(z ** 4 + 1.0) < DEGENERACY_TOL)


def lambda_pm_array(z: np.ndarray, branch: int = 1) -> Tuple[np.ndarray, np.ndarray]:
    """
    Vectorized lambda_+, lambda_- over an array of z.

    Args:
        z: complex array
        branch: +1 for the principal square root, -1 for its negative

    Returns:
        tuple: (lambda_plus, lambda_minus), NaN at degenerate entries
    """
    if branch not in (1, -1):
        raise InvalidConfiguration(f"branch must be +1 or -1, got {branch!r}")
    z = np.asarray(z, dtype=np.complex128)
    bad = degenerate_mask(z)
    safe = np.where(bad, 1.0, z)
    root = branch * np.sqrt(safe ** 4 + 1.0)
    denom = SQRT2 * safe
    lp = (safe ** 2 - 1.0 + root) / denom
    lm = (safe ** 2 - 1.0 - root) / denom
    lp = np.where(bad, np.nan + 0j, lp)
    lm = np.where(bad, np.nan + 0j, lm)
    return lp, lm


def check_lambda_point(z: complex) -> complex:
    """Validate z for lambda_pm, returning it as a complex scalar"""
    z = as_scalar(z, 'z')
    if abs(z) < DEGENERACY_TOL:
        raise DegeneratePoint(z, "z = 0")
    if abs(z ** 4 + 1.0) < DEGENERACY_TOL:
        raise DegeneratePoint(z, "z^4 = -1 (branch point, lambda_+ = lambda_-)")
    return z


def lambda_pm(z: complex, branch: int = 1) -> LambdaPair:
    """
    Evaluate lambda_+ and lambda_- at z.

    Args:
        z: nonzero complex point
        branch: +1 principal root (default), -1 swaps the roots

    Returns:
        LambdaPair: lambda_+ lambda_- = -1 and lambda_+ + lambda_- = sqrt(2)(z - 1/z)

    Raises:
        DegeneratePoint: z = 0 or z^4 = -1
    """
    z = check_lambda_point(z)
    lp, lm = lambda_pm_array(np.array([z]), branch)
    return LambdaPair(complex(lp[0]), complex(lm[0]))
