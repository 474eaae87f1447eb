"""
Generating-function value containers
"""

from dataclasses import dataclass
from enum import Enum
from typing import Any, Dict


class GFMethod(str, Enum):
    """Route by which p_k^N(z), r_k^N(z) were obtained"""
    LEMMA = "lemma"
    KONNO = "konno"
    SOLVE = "solve"
    SERIES = "series"

    @classmethod
    def parse(cls, value: Any) -> 'GFMethod':
        if isinstance(value, cls):
            return value
        try:
            return cls(str(value).strip().lower())
        except ValueError:
            choices = ', '.join(m.value for m in cls)
            raise ValueError(f"unknown method {value!r}; expected one of {choices}") from None


@dataclass(frozen=True)
class GFValue:
    """Pair (p, r) of generating-function values at z"""
    p: complex
    r: complex
    z: complex
    N: int
    k: int
    method: GFMethod

    def to_dict(self) -> Dict[str, Any]:
        return {
            'p': self.p,
            'r': self.r,
            'z': self.z,
            'N': self.N,
            'k': self.k,
            'method': self.method.value,
        }
