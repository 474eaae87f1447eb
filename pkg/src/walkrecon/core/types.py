"""
Domain types shared by every computation

Qubit states, coin operators, walk geometry and the tolerance policy.
All types are frozen after construction and validate their invariants
in ``__post_init__``.

Coin-state ordering: component 0 is L (left-mover), component 1 is R
(right-mover), so that t[0, 1] is |R>.
"""

import math
from dataclasses import dataclass
from enum import Enum
from typing import Any, Dict, Optional, Sequence, Union

import numpy as np

from .errors import InvalidConfiguration, NonFiniteValue, NormViolation, UnitarityViolation

ComplexScalar = complex

NORM_TOL = 1e-12
UNITARITY_TOL = 1e-12
SQRT1_2 = 1.0 / math.sqrt(2.0)


def as_scalar(value: Any, what: str = "scalar") -> ComplexScalar:
    """Coerce to a finite Python complex, rejecting NaN/Inf"""
    z = complex(value)
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise NonFiniteValue(what, z)
    return z


@dataclass(frozen=True)
class QubitState:
    """Initial coin state phi = t[alpha, beta]"""
    alpha: ComplexScalar
    beta: ComplexScalar

    def __post_init__(self):
        object.__setattr__(self, 'alpha', as_scalar(self.alpha, 'alpha'))
        object.__setattr__(self, 'beta', as_scalar(self.beta, 'beta'))
        norm = abs(self.alpha) ** 2 + abs(self.beta) ** 2
        if abs(norm - 1.0) > NORM_TOL:
            raise NormViolation(norm)

    @property
    def vector(self) -> np.ndarray:
        return np.array([self.alpha, self.beta], dtype=np.complex128)

    @property
    def overlap(self) -> ComplexScalar:
        """conj(alpha) * beta, the only cross term absorption probabilities see"""
        return self.alpha.conjugate() * self.beta

    def to_dict(self) -> Dict[str, Any]:
        return {'alpha': self.alpha, 'beta': self.beta}


def make_qubit(alpha: Any, beta: Any) -> QubitState:
    """
    Build a qubit state, enforcing the norm constraint.

    Raises:
        NormViolation: when | |alpha|^2 + |beta|^2 - 1 | > 1e-12
    """
    return QubitState(alpha, beta)


STATE_L = QubitState(1.0, 0.0)
STATE_R = QubitState(0.0, 1.0)


def global_phase(qubit: QubitState, w: complex) -> QubitState:
    """Multiply both components by the unit-modulus phase w"""
    w = as_scalar(w, 'phase')
    if abs(abs(w) - 1.0) > NORM_TOL:
        raise InvalidConfiguration(f"phase must have unit modulus, got |w|={abs(w)!r}")
    return QubitState(w * qubit.alpha, w * qubit.beta)


def random_qubit(rng: np.random.Generator) -> QubitState:
    """Uniformly random pure state from a seeded generator"""
    v = rng.normal(size=2) + 1j * rng.normal(size=2)
    v = v / np.linalg.norm(v)
    return QubitState(complex(v[0]), complex(v[1]))


def check_unitarity(U: Union['CoinOperator', Sequence[Sequence[complex]], np.ndarray]) -> float:
    """
    Max entrywise residual of U U^dagger - I.

    Accepts a CoinOperator or any 2x2 array-like, so that candidate
    matrices can be measured before construction rejects them.
    """
    m = U.matrix if isinstance(U, CoinOperator) else np.asarray(U, dtype=np.complex128)
    if m.shape != (2, 2):
        raise InvalidConfiguration(f"coin must be 2x2, got shape {m.shape}")
    return float(np.max(np.abs(m @ m.conj().T - np.eye(2))))


@dataclass(frozen=True)
class CoinOperator:
    """Row-major 2x2 unitary U = [[a, b], [c, d]]"""
    a: ComplexScalar
    b: ComplexScalar
    c: ComplexScalar
    d: ComplexScalar
    name: str = "custom"

    def __post_init__(self):
        for key in ('a', 'b', 'c', 'd'):
            object.__setattr__(self, key, as_scalar(getattr(self, key), key))
        residual = check_unitarity(self.matrix)
        if residual > UNITARITY_TOL:
            raise UnitarityViolation(residual)

    @property
    def matrix(self) -> np.ndarray:
        return np.array([[self.a, self.b], [self.c, self.d]], dtype=np.complex128)

    @property
    def left_part(self) -> np.ndarray:
        """P = [[a, b], [0, 0]]: output that moves one site left"""
        return np.array([[self.a, self.b], [0.0, 0.0]], dtype=np.complex128)

    @property
    def right_part(self) -> np.ndarray:
        """Q = [[0, 0], [c, d]]: output that moves one site right"""
        return np.array([[0.0, 0.0], [self.c, self.d]], dtype=np.complex128)

    @property
    def is_hadamard(self) -> bool:
        return bool(np.allclose(self.matrix, hadamard_coin().matrix, rtol=0.0, atol=1e-15))

    def to_dict(self) -> Dict[str, Any]:
        return {'name': self.name, 'a': self.a, 'b': self.b, 'c': self.c, 'd': self.d}


def hadamard_coin() -> CoinOperator:
    """H = (1/sqrt 2) [[1, 1], [1, -1]]"""
    return CoinOperator(SQRT1_2, SQRT1_2, SQRT1_2, -SQRT1_2, name="hadamard")


def coin_from_matrix(matrix: Any, name: str = "custom") -> CoinOperator:
    """Build a CoinOperator from any 2x2 array-like"""
    m = np.asarray(matrix, dtype=np.complex128)
    if m.shape != (2, 2):
        raise InvalidConfiguration(f"coin must be 2x2, got shape {m.shape}")
    return CoinOperator(complex(m[0, 0]), complex(m[0, 1]), complex(m[1, 0]), complex(m[1, 1]), name=name)


class BoundaryKind(str, Enum):
    FINITE = "finite"
    SEMI_INFINITE = "semi_infinite"


@dataclass(frozen=True)
class Boundary:
    """Absorbing barriers at 0 and N (finite) or at 0 only (semi-infinite)"""
    kind: BoundaryKind
    N: Optional[int] = None

    def __post_init__(self):
        if self.kind is BoundaryKind.FINITE:
            if self.N is None or int(self.N) != self.N or self.N < 2:
                raise InvalidConfiguration(f"finite boundary needs integer N >= 2, got {self.N!r}")
        elif self.N is not None:
            raise InvalidConfiguration("semi-infinite boundary takes no N")

    @classmethod
    def finite(cls, N: int) -> 'Boundary':
        return cls(BoundaryKind.FINITE, N)

    @classmethod
    def semi_infinite(cls) -> 'Boundary':
        return cls(BoundaryKind.SEMI_INFINITE)

    @property
    def is_finite(self) -> bool:
        return self.kind is BoundaryKind.FINITE


@dataclass(frozen=True)
class WalkConfig:
    """Boundary geometry, start site and initial coin state"""
    boundary: Boundary
    start_k: int
    qubit: QubitState
    coin: CoinOperator

    def __post_init__(self):
        if int(self.start_k) != self.start_k:
            raise InvalidConfiguration(f"start_k must be an integer, got {self.start_k!r}")
        if self.start_k < 1:
            raise InvalidConfiguration(f"start_k must be >= 1, got {self.start_k}")
        if self.boundary.is_finite and self.start_k > self.boundary.N - 1:
            raise InvalidConfiguration(
                f"start_k must lie in 1..{self.boundary.N - 1} for N={self.boundary.N}, got {self.start_k}"
            )

    @classmethod
    def finite(cls, N: int, k: int = 1, qubit: QubitState = STATE_R,
               coin: Optional[CoinOperator] = None) -> 'WalkConfig':
        return cls(Boundary.finite(N), k, qubit, coin or hadamard_coin())

    @classmethod
    def semi_infinite(cls, k: int = 1, qubit: QubitState = STATE_R,
                      coin: Optional[CoinOperator] = None) -> 'WalkConfig':
        return cls(Boundary.semi_infinite(), k, qubit, coin or hadamard_coin())

    def to_dict(self) -> Dict[str, Any]:
        return {
            'boundary': self.boundary.kind.value,
            'N': self.boundary.N,
            'start_k': self.start_k,
            'qubit': self.qubit.to_dict(),
            'coin': self.coin.to_dict(),
        }


@dataclass(frozen=True)
class TolerancePolicy:
    """Single source of truth for every numerical threshold"""
    survival_tol: float = 1e-14
    max_steps: int = 1_000_000
    quad_tol: float = 1e-10
    max_grid_doublings: int = 16
    residual_tol: float = 1e-12

    def __post_init__(self):
        for key in ('survival_tol', 'quad_tol', 'residual_tol'):
            value = getattr(self, key)
            if not (value > 0 and math.isfinite(value)):
                raise InvalidConfiguration(f"{key} must be strictly positive, got {value!r}")
        if int(self.max_steps) != self.max_steps or self.max_steps < 1:
            raise InvalidConfiguration(f"max_steps must be an integer >= 1, got {self.max_steps!r}")
        if int(self.max_grid_doublings) != self.max_grid_doublings or self.max_grid_doublings < 1:
            raise InvalidConfiguration(
                f"max_grid_doublings must be an integer >= 1, got {self.max_grid_doublings!r}"
            )

    def to_dict(self) -> Dict[str, Any]:
        return {
            'survival_tol': self.survival_tol,
            'max_steps': self.max_steps,
            'quad_tol': self.quad_tol,
            'max_grid_doublings': self.max_grid_doublings,
            'residual_tol': self.residual_tol,
        }


def parse_state(text: str) -> QubitState:
    """
    Parse a CLI state spec: 'L', 'R', or 'a_re,a_im,b_re,b_im'.

    Raises:
        InvalidConfiguration: malformed text
        NormViolation: components do not form a unit vector
    """
    token = text.strip()
    if token.upper() == 'L':
        return STATE_L
    if token.upper() == 'R':
        return STATE_R
    parts = token.split(',')
    if len(parts) != 4:
        raise InvalidConfiguration(f"state must be L, R or a_re,a_im,b_re,b_im; got {text!r}")
    try:
        a_re, a_im, b_re, b_im = (float(p) for p in parts)
    except ValueError as e:
        raise InvalidConfiguration(f"state components must be numbers: {text!r}") from e
    return make_qubit(complex(a_re, a_im), complex(b_re, b_im))


def parse_complex(text: str) -> ComplexScalar:
    """Parse 're,im' into a complex scalar"""
    parts = text.strip().split(',')
    if len(parts) != 2:
        raise InvalidConfiguration(f"complex value must be re,im; got {text!r}")
    try:
        return as_scalar(complex(float(parts[0]), float(parts[1])), 'z')
    except ValueError as e:
        raise InvalidConfiguration(f"complex components must be numbers: {text!r}") from e
