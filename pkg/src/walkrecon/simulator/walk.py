"""
Time-domain evolution of the coined walk

Step rule: psi_{n+1}(x) = P psi_n(x+1) + Q psi_n(x-1), with P the top row
and Q the bottom row of the coin. Sites outside the lattice contribute zero.
"""

from dataclasses import dataclass
import logging

import numpy as np

from ..core.errors import InvalidConfiguration
from ..core.types import CoinOperator

logger = logging.getLogger(__name__)

NORM_SLACK = 1e-12


@dataclass(frozen=True)
class WaveState:
    """
    Position-and-coin configuration of the walker.

    amplitudes has shape (X_max + 1, 2): row x holds the (L, R) coin
    amplitudes at site x.
    """
    amplitudes: np.ndarray
    time: int = 0

    def __post_init__(self):
        amps = np.asarray(self.amplitudes, dtype=np.complex128)
        if amps.ndim != 2 or amps.shape[1] != 2:
            raise InvalidConfiguration(f"amplitudes must have shape (sites, 2), got {amps.shape}")
        if self.time < 0:
            raise InvalidConfiguration(f"time must be >= 0, got {self.time}")
        if not np.all(np.isfinite(amps)):
            raise InvalidConfiguration("amplitudes must be finite")
        if self._norm(amps) > 1.0 + NORM_SLACK:
            raise InvalidConfiguration(f"total squared norm {self._norm(amps)!r} exceeds 1")
        object.__setattr__(self, 'amplitudes', amps)

    @staticmethod
    def _norm(amps: np.ndarray) -> float:
        return float(np.vdot(amps, amps).real)

    @property
    def norm(self) -> float:
        return self._norm(self.amplitudes)

    @property
    def sites(self) -> int:
        return self.amplitudes.shape[0]

    @classmethod
    def localized(cls, sites: int, x: int, spinor) -> 'WaveState':
        """All amplitude at site x with coin state spinor"""
        if not 0 <= x < sites:
            raise InvalidConfiguration(f"site {x} outside lattice 0..{sites - 1}")
        amps = np.zeros((sites, 2), dtype=np.complex128)
        amps[x] = spinor
        return cls(amps, 0)


def propagate(src: np.ndarray, dst: np.ndarray, coin: CoinOperator, top: int) -> None:
    """
    Write one step of ``src`` into ``dst`` over sites 0..top.

    ``src`` must vanish above ``top - 1`` unless ``top`` is the last site;
    ``dst`` must already vanish above ``top``.
    """
    a, b, c, d = coin.a, coin.b, coin.c, coin.d
    dst[:top, 0] = a * src[1:top + 1, 0] + b * src[1:top + 1, 1]
    dst[top, 0] = 0.0
    dst[0, 1] = 0.0
    dst[1:top + 1, 1] = c * src[:top, 0] + d * src[:top, 1]


def step_walk(state: WaveState, coin: CoinOperator) -> WaveState:
    """
    Apply one coin-and-shift step to the whole lattice.

    Args:
        state: current wave state
        coin: coin operator

    Returns:
        WaveState: evolved state with time incremented
    """
    new = np.zeros_like(state.amplitudes)
    propagate(state.amplitudes, new, coin, state.sites - 1)
    return WaveState(new, state.time + 1)
