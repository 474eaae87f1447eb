"""
Absorption probabilities from generating functions on the unit circle

With f_L = (p + r)/sqrt 2 and f_R = (p - r)/sqrt 2 evaluated at e^{i theta}:

c1 = mean |f_L|^2,  c2 = mean |f_R|^2,  c3 = mean f_L conj(f_R)
P  = c1 |alpha|^2 + c2 |beta|^2 + 2 Re(c3 conj(alpha) beta)

The weights are the Hadamard entries; no general-coin form is attempted.
"""

from dataclasses import dataclass, field
from typing import Any, Callable, Dict, Optional, Tuple, Union
import logging
import math

import numpy as np

from ..core.errors import DivergedInput, InvalidConfiguration
from ..core.types import SQRT1_2, QubitState, TolerancePolicy
from ..genfunc.konno import konno_pr_array
from ..genfunc.lemma import lemma_pr_array
from ..genfunc.solve import solve_pr_array
from ..genfunc.values import GFMethod
from .quadrature import QuadratureReport, QuadStatus, circle_quadrature

logger = logging.getLogger(__name__)

IMAG_RESIDUE_TOL = 1e-10
RANGE_SLACK = 1e-8


@dataclass
class IntegralCoefficients:
    c1: float
    c2: float
    c3: complex
    reports: Tuple[QuadratureReport, QuadratureReport, QuadratureReport]
    method: GFMethod
    N: int
    k: int
    imag_residue: Dict[str, float] = field(default_factory=dict)

    @property
    def converged(self) -> bool:
        return all(report.converged for report in self.reports)

    @property
    def statuses(self) -> Dict[str, str]:
        return {name: report.status.value for name, report in zip(('c1', 'c2', 'c3'), self.reports)}

    def to_dict(self) -> Dict[str, Any]:
        result = {
            'method': self.method.value,
            'N': self.N,
            'k': self.k,
            'converged': self.converged,
            'reports': {name: report.to_dict() for name, report in zip(('c1', 'c2', 'c3'), self.reports)},
            'imag_residue': dict(self.imag_residue),
        }
        # never hand out numbers for integrals that did not converge
        if self.converged:
            result.update({'c1': self.c1, 'c2': self.c2, 'c3': self.c3})
        else:
            result.update({'c1': None, 'c2': None, 'c3': None})
        return result


def gf_on_circle(method: Union[GFMethod, str], N: int, k: int) -> Callable[[np.ndarray], Tuple[np.ndarray, np.ndarray]]:
    """theta -> (p_k^N(e^{i theta}), r_k^N(e^{i theta})) for the chosen method"""
    method = GFMethod.parse(method)
    if not 1 <= k <= N - 1:
        raise InvalidConfiguration(f"k must lie in 1..{N - 1}, got {k}")
    if method is GFMethod.SERIES:
        raise InvalidConfiguration("series values are not defined on the unit circle")

    def evaluate(theta: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
        z = np.exp(1j * theta)
        if N == 2:
            # boundary conditions alone: p_1 = z, r_1 = 0
            return z, np.zeros_like(z)
        if method is GFMethod.SOLVE:
            p, r, _ = solve_pr_array(z, N, strict=False)
            return p[:, k - 1], r[:, k - 1]
        if method is GFMethod.LEMMA:
            return lemma_pr_array(z, N, k)
        return konno_pr_array(z, N, k)

    return evaluate


def compute_c123(N: int, k: int, method: Union[GFMethod, str] = GFMethod.SOLVE,
                 tol: Optional[TolerancePolicy] = None, **quad_options) -> IntegralCoefficients:
    """
    The three coefficient integrals with p, r from the chosen method.

    Args:
        N: right barrier, at least 2
        k: start site in 1..N-1
        method: LEMMA, KONNO or SOLVE
        tol: tolerance policy for the quadratures
        **quad_options: passed through to circle_quadrature

    Returns:
        IntegralCoefficients: c1, c2 as real parts; imaginary residues recorded
    """
    if N < 2:
        raise InvalidConfiguration(f"N must be >= 2, got {N}")
    method = GFMethod.parse(method)
    pr = gf_on_circle(method, N, k)

    def f_left(theta):
        p, r = pr(theta)
        return SQRT1_2 * (p + r)

    def f_right(theta):
        p, r = pr(theta)
        return SQRT1_2 * (p - r)

    reports = (
        circle_quadrature(lambda t: np.abs(f_left(t)) ** 2, tol, **quad_options),
        circle_quadrature(lambda t: np.abs(f_right(t)) ** 2, tol, **quad_options),
        circle_quadrature(lambda t: f_left(t) * np.conj(f_right(t)), tol, **quad_options),
    )
    c1_raw, c2_raw, c3 = (report.mean for report in reports)
    residue = {'c1': abs(c1_raw.imag), 'c2': abs(c2_raw.imag)}
    for name, value in residue.items():
        if value > IMAG_RESIDUE_TOL and math.isfinite(value):
            logger.warning(f"{name} imaginary residue {value:.3e} for {method.value} N={N} k={k}")

    coeffs = IntegralCoefficients(c1_raw.real, c2_raw.real, c3, reports, method, N, k, residue)
    if coeffs.converged and abs(c3) ** 2 > coeffs.c1 * coeffs.c2 + RANGE_SLACK:
        logger.warning(f"|c3|^2 exceeds c1*c2 for {method.value} N={N} k={k}")
    logger.info(f"c123 {method.value} N={N} k={k}: {coeffs.statuses}")
    return coeffs


def absorption_from_c123(coeffs: IntegralCoefficients, qubit: QubitState) -> float:
    """
    c1 |alpha|^2 + c2 |beta|^2 + 2 Re(c3 conj(alpha) beta).

    Values outside [0, 1] are returned as they are and logged.

    Raises:
        DivergedInput: any of the three reports not Converged
    """
    if not coeffs.converged:
        raise DivergedInput(coeffs.statuses)
    value = (coeffs.c1 * abs(qubit.alpha) ** 2 + coeffs.c2 * abs(qubit.beta) ** 2
             + 2.0 * (coeffs.c3 * qubit.overlap).real)
    if not -RANGE_SLACK <= value <= 1.0 + RANGE_SLACK:
        logger.warning(f"{coeffs.method.value} probability {value!r} outside [0, 1]")
    return value


def theorem_absorption(N: int, k: int, qubit: QubitState, method: Union[GFMethod, str] = GFMethod.SOLVE,
                       tol: Optional[TolerancePolicy] = None,
                       **quad_options) -> Tuple[Optional[float], IntegralCoefficients]:
    """compute_c123 followed by absorption_from_c123; probability is None unless converged"""
    coeffs = compute_c123(N, k, method, tol, **quad_options)
    if not coeffs.converged:
        return None, coeffs
    return absorption_from_c123(coeffs, qubit), coeffs


def r_square_integral(N: int, method: Union[GFMethod, str] = GFMethod.SOLVE,
                      tol: Optional[TolerancePolicy] = None, **quad_options) -> QuadratureReport:
    """Quadrature of |r_1^N(e^{i theta})|^2 over [0, 2pi)"""
    pr = gf_on_circle(method, N, 1)
    return circle_quadrature(lambda t: np.abs(pr(t)[1]) ** 2, tol, **quad_options)


def corollary_p1N(N: int, method: Union[GFMethod, str] = GFMethod.SOLVE,
                  tol: Optional[TolerancePolicy] = None,
                  **quad_options) -> Tuple[Optional[float], QuadratureReport]:
    """
    P_1^N(|R>) = (1/2)(1 + mean |r_1^N|^2).

    Args:
        N: right barrier, at least 2
        method: source of r_1^N
        tol: tolerance policy

    Returns:
        tuple: (probability or None when the integral did not converge, report)
    """
    if N < 2:
        raise InvalidConfiguration(f"N must be >= 2, got {N}")
    report = r_square_integral(N, method, tol, **quad_options)
    if report.status is not QuadStatus.CONVERGED:
        logger.info(f"corollary N={N} via {GFMethod.parse(method).value}: {report.status.value}, no value")
        return None, report
    return 0.5 * (1.0 + report.mean.real), report


def general_p1N_formula(r_integral: float, qubit: QubitState) -> float:
    """
    (1/2)(1 + I) + (1/2)(1 - I) 2 Re(conj(alpha) beta), I = mean |r_1^N|^2.
    """
    return 0.5 * (1.0 + r_integral) + 0.5 * (1.0 - r_integral) * 2.0 * qubit.overlap.real
