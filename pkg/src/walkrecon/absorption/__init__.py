"""
Absorption Module

Absorption probabilities from generating functions and closed forms:
- Periodic midpoint quadrature with divergence detection
- The c1, c2, c3 coefficient integrals and their combination
- The k = 1, |R> corollary and its general-state form
- The semi-infinite closed form
- Exact iteration of the conjectured recursion
"""

from .quadrature import QuadratureReport, QuadStatus, circle_quadrature, midpoint_nodes
from .coefficients import (
    IntegralCoefficients,
    absorption_from_c123,
    compute_c123,
    corollary_p1N,
    general_p1N_formula,
    gf_on_circle,
    r_square_integral,
    theorem_absorption,
)
from .closed_forms import semi_infinite_closed_form
from .conjecture import RationalProb, conjecture_limit_check, conjecture_sequence

__all__ = [
    "QuadratureReport",
    "QuadStatus",
    "circle_quadrature",
    "midpoint_nodes",
    "IntegralCoefficients",
    "absorption_from_c123",
    "compute_c123",
    "corollary_p1N",
    "general_p1N_formula",
    "gf_on_circle",
    "r_square_integral",
    "theorem_absorption",
    "semi_infinite_closed_form",
    "RationalProb",
    "conjecture_limit_check",
    "conjecture_sequence",
]
