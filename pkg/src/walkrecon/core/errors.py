"""
Exception hierarchy for walkrecon

Hard errors only. Soft findings (a run that did not converge, a divergent
integral, an inconclusive verdict) are carried as values on the result objects.
"""

from typing import Any, Optional


class WalkReconError(Exception):
    """Base class for all walkrecon errors"""


class NormViolation(WalkReconError):
    """Qubit state does not satisfy |alpha|^2 + |beta|^2 = 1"""

    def __init__(self, norm: float):
        self.norm = norm
        super().__init__(f"|alpha|^2 + |beta|^2 = {norm!r}, expected 1")


class UnitarityViolation(WalkReconError):
    """Coin operator is not unitary within tolerance"""

    def __init__(self, residual: float):
        self.residual = residual
        super().__init__(f"U U^dagger - I residual {residual:.3e} exceeds tolerance")


class InvalidConfiguration(WalkReconError):
    """Walk geometry or argument outside the allowed range"""


class NonFiniteValue(WalkReconError):
    """A computation produced NaN or Inf"""

    def __init__(self, what: str, value: Any = None):
        self.what = what
        self.value = value
        super().__init__(f"non-finite value in {what}: {value!r}")


class DegeneratePoint(WalkReconError):
    """Generating-function formula is undefined at this z"""

    def __init__(self, z: Any, reason: str):
        self.z = z
        self.reason = reason
        super().__init__(f"degenerate point z={z!r}: {reason}")


class PoleHit(DegeneratePoint):
    """z lies on a pole of a rational function"""


class SingularSystem(WalkReconError):
    """Boundary-value system is too ill-conditioned to trust"""

    def __init__(self, z: Any, condition: float):
        self.z = z
        self.condition = condition
        super().__init__(f"system at z={z!r} has condition estimate {condition:.3e}")


class ConvergenceError(WalkReconError):
    """Truncated series tail exceeds the tolerance"""

    def __init__(self, tail_bound: float, tolerance: float):
        self.tail_bound = tail_bound
        self.tolerance = tolerance
        super().__init__(f"series tail bound {tail_bound:.3e} exceeds {tolerance:.3e}")


class NoConvergence(WalkReconError):
    """Iterative root finder hit its iteration cap"""

    def __init__(self, iterations: int, residual: Optional[float] = None):
        self.iterations = iterations
        self.residual = residual
        super().__init__(f"no convergence after {iterations} iterations (residual {residual!r})")


class CapacityError(WalkReconError):
    """Requested lattice exceeds the configured memory bound"""

    def __init__(self, sites: int, limit: int):
        self.sites = sites
        self.limit = limit
        super().__init__(f"lattice of {sites} sites exceeds limit {limit}")


class DivergedInput(WalkReconError):
    """Quadrature report feeding a probability did not converge"""

    def __init__(self, statuses: Any):
        self.statuses = statuses
        super().__init__(f"quadrature reports not converged: {statuses!r}")


class FormatUnsupported(WalkReconError):
    """Payload cannot be emitted in the requested format"""


class ConfigError(WalkReconError):
    """Configuration value rejected during validation"""
