"""
Generating-Function Module

Generating functions p_k^N(z), r_k^N(z) by several routes:
- Closed forms with shared coefficients A_z, B_z
- The printed C_z, E_z formulas, evaluated verbatim
- A numeric boundary-value solve of the recursion
- Power series read off simulated hitting streams
plus recursion residuals and the rational r(z) = z^3 / (2z^4 - 3z^2 + 2).
"""

from .values import GFMethod, GFValue
from .lambdas import LambdaPair, lambda_pm, lambda_pm_array
from .lemma import LemmaCoefficients, lemma_coefficients, lemma_gf, lemma_pr_array
from .konno import KonnoCoefficients, konno_coefficients, konno_gf, konno_pr_array
from .solve import solve_gf, solve_pr_array
from .series import SeriesPR, component_mapping_residual, gf_from_series, series_pr
from .residual import ResidualReport, evaluate_gf, gf_table, recursion_residual
from .rational import R13_DENOMINATOR, denominator_roots, pole_angles, r13_rational, r13_rational_array

__all__ = [
    "GFMethod",
    "GFValue",
    "LambdaPair",
    "lambda_pm",
    "lambda_pm_array",
    "LemmaCoefficients",
    "lemma_coefficients",
    "lemma_gf",
    "lemma_pr_array",
    "KonnoCoefficients",
    "konno_coefficients",
    "konno_gf",
    "konno_pr_array",
    "solve_gf",
    "solve_pr_array",
    "SeriesPR",
    "component_mapping_residual",
    "gf_from_series",
    "series_pr",
    "ResidualReport",
    "evaluate_gf",
    "gf_table",
    "recursion_residual",
    "R13_DENOMINATOR",
    "denominator_roots",
    "pole_angles",
    "r13_rational",
    "r13_rational_array",
]
