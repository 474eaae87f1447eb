"""
Verdict rules and the assembled verification report

Tier 0 is the time-domain simulator, tier 1 the numeric boundary-value
solve. A verdict for either published value is only issued when the two
tiers agree; closed forms never out-vote them.
"""

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Any, Dict, List, Optional

from ..absorption.conjecture import RationalProb

VERDICT_TOL = 1e-6

CLAIM_RECURSION = {
    'id': 'recursion_conjecture',
    'value': '2/3',
    'quote': 'the conjecture asserts that P_1^3(t[0,1]) = 2/3',
    'statement': 'P_1^(N+1) = (1 + 2 P_1^N) / (2 + 2 P_1^N), P_1^1 = 0',
}
CLAIM_RATIONAL_INTEGRAL = {
    'id': 'rational_integral_zero',
    'value': '1/2',
    'quote': 'P_1^3(t[0,1]) = 1/2 (1 + 0) = 1/2',
    'statement': 'int_0^{2pi} r_1^3(e^{i theta}) r_1^3(e^{-i theta}) d theta = 0',
}
CLAIM_BOUNDARY = {
    'id': 'konno_r13_zero',
    'quote': 'this is contrary to the boundary condition r_{N-1}^N(z) = 0 which evidently shows '
             'that r_1^N(z) = 0 if and only if N = 2',
}
CLAIM_LAMBDA = {
    'id': 'lambda_identities',
    'quote': 'lambda_+ lambda_- = -1, lambda_+ + lambda_- = sqrt(2)(z - 1/z)',
}
CLAIM_F = {
    'id': 'antiderivative_telescopes',
    'quote': 'from which we can show that F(2pi) - F(0) = 0',
}
CLAIM_POLES = {
    'id': 'rational_form',
    'quote': 'we can write r_1^3(z) = z^3/(2z^4 - 3z^2 + 2)',
}
CLAIM_LEMMA = {
    'id': 'shared_coefficients',
    'quote': 'p_k^N(z) = A_z lambda_+^(k-1) + B_z lambda_-^(k-1), r_k^N(z) = A_z lambda_+^(k+1) + B_z lambda_-^(k+1)',
}
CLAIM_THEOREM = {
    'id': 'coefficient_theorem',
    'quote': 'P_k^N(phi) = c1|alpha|^2 + c2|beta|^2 + 2Re(c3 conj(alpha) beta), irrespective of the initial location',
}
CLAIM_SEMI = {
    'id': 'semi_infinite',
    'quote': 'P_1^inf(phi) = 2/pi + 2(1 - 2/pi)Re(conj(alpha) beta)',
}
CLAIM_LIMIT = {
    'id': 'limit',
    'quote': 'P_1^N(t[0,1]) = 1/sqrt(2) as N -> inf',
}


class Verdict(str, Enum):
    MATCHES_RECURSION = "MatchesRecursion"
    MATCHES_PRINTED_VALUE = "MatchesPaperClaim"
    INCONCLUSIVE = "Inconclusive"


@dataclass
class ConjectureRow:
    N: int
    recursion: RationalProb
    simulator: float
    solve_corollary: Optional[float]
    quadrature_status: str
    simulator_converged: bool = True

    @property
    def delta_recursion(self) -> float:
        return abs(self.simulator - self.recursion.decimal)

    @property
    def delta_tiers(self) -> Optional[float]:
        if self.solve_corollary is None:
            return None
        return abs(self.simulator - self.solve_corollary)

    def to_dict(self) -> Dict[str, Any]:
        return {
            'N': self.N,
            'recursion': self.recursion,
            'simulator': self.simulator,
            'simulator_converged': self.simulator_converged,
            'solve_corollary': self.solve_corollary,
            'quadrature_status': self.quadrature_status,
            'delta_simulator_recursion': self.delta_recursion,
            'delta_simulator_solve': self.delta_tiers,
        }


@dataclass
class VerdictDecision:
    verdict: Verdict
    max_delta_recursion: Optional[float]
    max_delta_tiers: Optional[float]
    delta_printed_value: Optional[float]
    reasons: List[str] = field(default_factory=list)

    def to_dict(self) -> Dict[str, Any]:
        return {
            'verdict': self.verdict.value,
            'threshold': VERDICT_TOL,
            'max_delta_simulator_recursion': self.max_delta_recursion,
            'max_delta_tiers': self.max_delta_tiers,
            'delta_simulator_half_at_N3': self.delta_printed_value,
            'reasons': list(self.reasons),
        }


def decide_verdict(rows: List[ConjectureRow], extra_tier_deltas: Optional[List[float]] = None) -> VerdictDecision:
    """
    Apply the verdict rules to a conjecture table.

    Args:
        rows: one row per tabulated N
        extra_tier_deltas: further tier-0/tier-1 deltas (Parseval, theorem cross-check)

    Returns:
        VerdictDecision: verdict with the deltas it rests on
    """
    reasons: List[str] = []
    if not rows:
        return VerdictDecision(Verdict.INCONCLUSIVE, None, None, None, ["empty conjecture table"])

    tier_deltas: List[float] = []
    tiers_complete = True
    for row in rows:
        if row.delta_tiers is None:
            tiers_complete = False
            reasons.append(f"N={row.N}: solve quadrature {row.quadrature_status}")
        else:
            tier_deltas.append(row.delta_tiers)
        if not row.simulator_converged:
            tiers_complete = False
            reasons.append(f"N={row.N}: simulator did not reach survival tolerance")
    tier_deltas.extend(extra_tier_deltas or [])

    max_tiers = max(tier_deltas) if tier_deltas else None
    max_recursion = max(row.delta_recursion for row in rows)
    row3 = next((row for row in rows if row.N == 3), None)
    delta_half = abs(row3.simulator - float(Fraction(1, 2))) if row3 is not None else None

    if not tiers_complete:
        return VerdictDecision(Verdict.INCONCLUSIVE, max_recursion, max_tiers, delta_half, reasons)
    if max_tiers is not None and max_tiers >= VERDICT_TOL:
        reasons.append(f"tier 0 and tier 1 disagree by {max_tiers:.3e}")
        return VerdictDecision(Verdict.INCONCLUSIVE, max_recursion, max_tiers, delta_half, reasons)
    if max_recursion < VERDICT_TOL:
        reasons.append(f"simulator matches the recursion within {max_recursion:.3e} on every row")
        return VerdictDecision(Verdict.MATCHES_RECURSION, max_recursion, max_tiers, delta_half, reasons)
    if delta_half is not None and delta_half < VERDICT_TOL:
        reasons.append(f"simulator matches 1/2 at N=3 within {delta_half:.3e}")
        return VerdictDecision(Verdict.MATCHES_PRINTED_VALUE, max_recursion, max_tiers, delta_half, reasons)
    reasons.append(f"simulator departs from the recursion by {max_recursion:.3e}")
    return VerdictDecision(Verdict.INCONCLUSIVE, max_recursion, max_tiers, delta_half, reasons)


@dataclass
class VerifyReport:
    """Cross-method comparison with per-fragment findings and the verdict"""
    conjecture_table: List[ConjectureRow]
    decision: VerdictDecision
    citations: List[Dict[str, str]] = field(default_factory=lambda: [CLAIM_RECURSION, CLAIM_RATIONAL_INTEGRAL])
    fragments: Dict[str, Dict[str, Any]] = field(default_factory=dict)
    seed: Optional[int] = None

    @property
    def verdict(self) -> Verdict:
        return self.decision.verdict

    # fixed fragment order for serialization
    FRAGMENT_ORDER = ('lambda_identity', 'bc_checks', 'konno_flaw', 'lemma_recursion', 'r13_poles',
                      'F_audit', 'parseval', 'theorem_cross_check', 'semi_infinite', 'recursion_limit')

    def table_rows(self) -> List[Dict[str, Any]]:
        return [row.to_dict() for row in self.conjecture_table]

    def to_dict(self) -> Dict[str, Any]:
        result: Dict[str, Any] = {
            'conjecture_table': [row.to_dict() for row in self.conjecture_table],
            'verdict': self.decision.to_dict(),
            'citations': list(self.citations),
            'seed': self.seed,
        }
        for name in self.FRAGMENT_ORDER:
            if name in self.fragments:
                result[name] = self.fragments[name]
        return result
