"""
The rational form r(z) = z^3 / (2z^4 - 3z^2 + 2) and polynomial roots

Roots come from Durand-Kerner simultaneous iteration followed by a few
Newton steps per root. Coefficients are ordered highest degree first.
"""

from typing import List, Sequence, Tuple
import cmath
import logging

import numpy as np

from ..core.errors import InvalidConfiguration, NoConvergence, PoleHit
from ..core.types import as_scalar

logger = logging.getLogger(__name__)

R13_DENOMINATOR = (2.0, 0.0, -3.0, 0.0, 2.0)
POLE_TOL = 1e-14
MAX_ITERATIONS = 500
STEP_TOL = 1e-14
NEWTON_STEPS = 3
# initial angles are rotated off the real axis so symmetric polynomials do not stall
INITIAL_ANGLE = 0.4


def r13_denominator(z):
    return 2.0 * z ** 4 - 3.0 * z ** 2 + 2.0


def r13_rational_array(z: np.ndarray) -> np.ndarray:
    """Vectorized r(z); inf/NaN left in place at poles"""
    z = np.asarray(z, dtype=np.complex128)
    with np.errstate(divide='ignore', invalid='ignore'):
        return z ** 3 / r13_denominator(z)


def r13_rational(z: complex) -> complex:
    """
    z^3 / (2z^4 - 3z^2 + 2).

    Raises:
        PoleHit: |denominator| < 1e-14
    """
    z = as_scalar(z, 'z')
    denom = r13_denominator(z)
    if abs(denom) < POLE_TOL:
        raise PoleHit(z, "root of 2z^4 - 3z^2 + 2")
    return z ** 3 / denom


def _horner(coeffs: Sequence[complex], x: complex) -> complex:
    value = 0j
    for c in coeffs:
        value = value * x + c
    return value


def _derivative(coeffs: Sequence[complex]) -> List[complex]:
    n = len(coeffs) - 1
    return [c * (n - i) for i, c in enumerate(coeffs[:-1])]


def denominator_roots(coeffs: Sequence[float], max_iter: int = MAX_ITERATIONS) -> List[Tuple[complex, float]]:
    """
    All complex roots of a polynomial with their moduli.

    Args:
        coeffs: coefficients, highest degree first
        max_iter: Durand-Kerner iteration cap

    Returns:
        list: (root, modulus) sorted by argument in [0, 2pi)

    Raises:
        InvalidConfiguration: degree < 1 or zero leading coefficient
        NoConvergence: simultaneous iteration did not settle
    """
    coeffs = [complex(c) for c in coeffs]
    if len(coeffs) < 2:
        raise InvalidConfiguration("polynomial degree must be >= 1")
    if coeffs[0] == 0:
        raise InvalidConfiguration("leading coefficient must be nonzero")

    lead = coeffs[0]
    monic = [c / lead for c in coeffs]
    degree = len(monic) - 1

    if degree == 1:
        roots = [-monic[1]]
    else:
        radius = 1.0 + max(abs(c) for c in monic[1:])
        roots = [radius * cmath.exp(1j * (INITIAL_ANGLE + 2.0 * cmath.pi * j / degree)) for j in range(degree)]
        converged = False
        max_step = float('inf')
        for iteration in range(max_iter):
            max_step = 0.0
            for i in range(degree):
                denom = 1.0 + 0j
                for j in range(degree):
                    if i != j:
                        denom *= roots[i] - roots[j]
                if denom == 0:
                    denom = complex(STEP_TOL)
                step = _horner(monic, roots[i]) / denom
                roots[i] -= step
                max_step = max(max_step, abs(step))
            if max_step < STEP_TOL * max(1.0, max(abs(r) for r in roots)):
                converged = True
                logger.debug(f"Durand-Kerner settled after {iteration + 1} iterations")
                break
        if not converged:
            raise NoConvergence(max_iter, max_step)

    derivative = _derivative(monic)
    for i, root in enumerate(roots):
        for _ in range(NEWTON_STEPS):
            slope = _horner(derivative, root)
            if slope == 0:
                break
            root = root - _horner(monic, root) / slope
        roots[i] = root

    scale = float(np.linalg.norm(np.abs(coeffs)))
    worst = max(abs(_horner(coeffs, r)) for r in roots)
    if worst > 1e-12 * scale:
        logger.warning(f"root residual {worst:.3e} above 1e-12 * ||coeffs||")

    return sorted(((r, abs(r)) for r in roots), key=lambda item: cmath.phase(item[0]) % (2 * cmath.pi))


def pole_angles(roots: Sequence[Tuple[complex, float]]) -> List[float]:
    """Arguments in [0, 2pi) of the given roots, ascending"""
    return sorted(cmath.phase(root) % (2 * cmath.pi) for root, _ in roots)
