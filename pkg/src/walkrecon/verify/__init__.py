"""
Verification Module

Cross-method adjudication of the published claims:
- Characteristic-value identities and boundary conditions
- The printed C_z, E_z formulas against the boundary-value solve
- Pole analysis of the rational form and the antiderivative audit
- Parseval and coefficient-theorem cross-checks against the simulator
- The conjecture table and its verdict
"""

from .checks import (
    DEFAULT_SEED,
    analyze_r13_poles,
    annulus_samples,
    audit_F_antiderivative,
    boundary_condition_checks,
    branch_cut_crossings,
    check_lambda_identities,
    demonstrate_konno_flaw,
    lemma_checks,
    parseval_check,
    semi_infinite_check,
    theorem_cross_check,
)
from .verdict import ConjectureRow, Verdict, VerdictDecision, VerifyReport, decide_verdict
from .main import Verifier, conjecture_verdict

__all__ = [
    "DEFAULT_SEED",
    "analyze_r13_poles",
    "annulus_samples",
    "audit_F_antiderivative",
    "branch_cut_crossings",
    "boundary_condition_checks",
    "check_lambda_identities",
    "demonstrate_konno_flaw",
    "lemma_checks",
    "parseval_check",
    "semi_infinite_check",
    "theorem_cross_check",
    "ConjectureRow",
    "Verdict",
    "VerdictDecision",
    "VerifyReport",
    "decide_verdict",
    "Verifier",
    "conjecture_verdict",
]
