"""
Time-Domain Simulation Module

Exact evolution of the coined walk with absorbing barriers:
- Single steps of the coin-and-shift rule
- Finite runs between barriers at 0 and N
- Semi-infinite runs with a light-cone-bounded lattice
- Hitting-amplitude streams for generating-function checks
"""

from .walk import WaveState, step_walk
from .runs import (
    AbsorptionOutcome,
    BoundarySite,
    HittingRecord,
    HittingSeries,
    HittingStream,
    boundary_series,
    hitting_amplitude_series,
    run_finite_absorption,
    run_semi_infinite_absorption,
)
from .main import WalkSimulator

__all__ = [
    "WaveState",
    "step_walk",
    "AbsorptionOutcome",
    "BoundarySite",
    "HittingRecord",
    "HittingSeries",
    "HittingStream",
    "boundary_series",
    "hitting_amplitude_series",
    "run_finite_absorption",
    "run_semi_infinite_absorption",
    "WalkSimulator",
]
