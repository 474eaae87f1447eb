"""
Exact iteration of the conjectured recursion P^(N+1) = (1 + 2P^N) / (2 + 2P^N), P^1 = 0

Everything here is in fractions.Fraction; the limit 1/sqrt 2 is handled
through the exact test x^2 < 1/2.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, List, Union
import logging

from ..core.errors import InvalidConfiguration

logger = logging.getLogger(__name__)

HALF = Fraction(1, 2)


@dataclass(frozen=True)
class RationalProb:
    """Reduced non-negative fraction in [0, 1]"""
    numerator: int
    denominator: int

    def __post_init__(self):
        if self.denominator <= 0:
            raise InvalidConfiguration(f"denominator must be positive, got {self.denominator}")
        value = Fraction(self.numerator, self.denominator)
        if not 0 <= value <= 1:
            raise InvalidConfiguration(f"probability {value} outside [0, 1]")
        object.__setattr__(self, 'numerator', value.numerator)
        object.__setattr__(self, 'denominator', value.denominator)

    @classmethod
    def from_fraction(cls, value: Union[Fraction, int]) -> 'RationalProb':
        value = Fraction(value)
        return cls(value.numerator, value.denominator)

    @property
    def value(self) -> Fraction:
        return Fraction(self.numerator, self.denominator)

    @property
    def decimal(self) -> float:
        return self.numerator / self.denominator

    def __str__(self) -> str:
        return f"{self.numerator}/{self.denominator}"


def recursion_step(value: Fraction) -> Fraction:
    return (1 + 2 * value) / (2 + 2 * value)


def conjecture_sequence(N_max: int) -> List[RationalProb]:
    """
    P_1^N for N = 1..N_max, exactly.

    Args:
        N_max: last N, at least 1

    Returns:
        list: RationalProb, index 0 holding N = 1
    """
    if int(N_max) != N_max or N_max < 1:
        raise InvalidConfiguration(f"N_max must be an integer >= 1, got {N_max!r}")
    values = [Fraction(0)]
    for _ in range(N_max - 1):
        values.append(recursion_step(values[-1]))
    return [RationalProb.from_fraction(v) for v in values]


def conjecture_limit_check(N_max: int) -> Dict[str, Any]:
    """
    Exact monotonicity and the bound P^2 < 1/2 for every term up to N_max.

    Returns:
        dict: increasing, bounded, first offending N (or None) and the last term
    """
    sequence = conjecture_sequence(N_max)
    increasing = True
    bounded = True
    first_violation = None
    for n, (prev, curr) in enumerate(zip(sequence, sequence[1:]), start=2):
        if not curr.value > prev.value:
            increasing = False
            first_violation = first_violation or n
        if not curr.value ** 2 < HALF:
            bounded = False
            first_violation = first_violation or n
    if sequence[0].value ** 2 >= HALF:
        bounded = False
        first_violation = first_violation or 1

    last = sequence[-1]
    logger.debug(f"recursion up to N={N_max}: increasing={increasing} bounded={bounded} last={last}")
    return {
        'N_max': N_max,
        'increasing': increasing,
        'bounded_by_inverse_sqrt2': bounded,
        'first_violation': first_violation,
        'last': last,
        'gap_to_limit': 2 ** -0.5 - last.decimal,
    }
