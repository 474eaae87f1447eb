"""
walkrecon - Hadamard walk absorption lab

Time-domain simulation, generating-function solves and unit-circle
quadrature for absorption probabilities of the coined quantum walk
between absorbing barriers, with cross-method checks of published
closed forms and the conjectured recursion.
"""

__version__ = "1.0.0"

# Core imports
from .core import CoinOperator, QubitState, TolerancePolicy, WalkConfig, hadamard_coin, make_qubit
from .simulator import WalkSimulator
from .absorption import RationalProb, conjecture_sequence, corollary_p1N, theorem_absorption
from .verify import Verifier, conjecture_verdict
from .reporting import OutputEnvelope, ReportGenerator

# Configuration
from .config import Config, load_config

__all__ = [
    # Core classes
    "CoinOperator",
    "QubitState",
    "TolerancePolicy",
    "WalkConfig",
    "hadamard_coin",
    "make_qubit",
    "WalkSimulator",
    "RationalProb",
    "conjecture_sequence",
    "corollary_p1N",
    "theorem_absorption",
    "Verifier",
    "conjecture_verdict",
    "OutputEnvelope",
    "ReportGenerator",

    # Configuration
    "Config",
    "load_config",

    # Metadata
    "__version__",
]
