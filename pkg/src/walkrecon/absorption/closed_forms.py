"""
Published closed forms for absorption probabilities
"""

import math

from ..core.types import QubitState

TWO_OVER_PI = 2.0 / math.pi


def semi_infinite_closed_form(qubit: QubitState) -> float:
    """P_1^inf(phi) = 2/pi + 2(1 - 2/pi) Re(conj(alpha) beta)"""
    return TWO_OVER_PI + 2.0 * (1.0 - TWO_OVER_PI) * qubit.overlap.real
