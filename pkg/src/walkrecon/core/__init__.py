"""
Core domain types

Qubit states, coin operators, walk configurations, the tolerance policy
and the exception hierarchy used across walkrecon.
"""

from .errors import (
    CapacityError,
    ConfigError,
    ConvergenceError,
    DegeneratePoint,
    DivergedInput,
    FormatUnsupported,
    InvalidConfiguration,
    NoConvergence,
    NonFiniteValue,
    NormViolation,
    PoleHit,
    SingularSystem,
    UnitarityViolation,
    WalkReconError,
)
from .types import (
    STATE_L,
    STATE_R,
    Boundary,
    BoundaryKind,
    CoinOperator,
    ComplexScalar,
    QubitState,
    TolerancePolicy,
    WalkConfig,
    as_scalar,
    check_unitarity,
    coin_from_matrix,
    global_phase,
    hadamard_coin,
    make_qubit,
    parse_complex,
    parse_state,
    random_qubit,
)

__all__ = [
    "STATE_L",
    "STATE_R",
    "Boundary",
    "BoundaryKind",
    "CoinOperator",
    "ComplexScalar",
    "QubitState",
    "TolerancePolicy",
    "WalkConfig",
    "as_scalar",
    "check_unitarity",
    "coin_from_matrix",
    "global_phase",
    "hadamard_coin",
    "make_qubit",
    "parse_complex",
    "parse_state",
    "random_qubit",
    "CapacityError",
    "ConfigError",
    "ConvergenceError",
    "DegeneratePoint",
    "DivergedInput",
    "FormatUnsupported",
    "InvalidConfiguration",
    "NoConvergence",
    "NonFiniteValue",
    "NormViolation",
    "PoleHit",
    "SingularSystem",
    "UnitarityViolation",
    "WalkReconError",
]
