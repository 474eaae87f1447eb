"""
Configuration management for walkrecon

Handles loading and validation of the tolerance policy and run defaults
from YAML files, environment variables and command-line flags.
"""

import os
import yaml
from pathlib import Path
from typing import Dict, List, Optional, Any
from dataclasses import dataclass, field, asdict
from dotenv import load_dotenv

from .core.errors import ConfigError, InvalidConfiguration
from .core.types import TolerancePolicy

# Load environment variables
load_dotenv()

DEFAULT_CONFIG_PATH = Path("config") / "default.yaml"
OUTPUT_FORMATS = ('json', 'csv', 'table')
ENV_PREFIX = 'WALKRECON_'


@dataclass
class SimulationConfig:
    """Configuration for the time-domain simulator"""
    max_steps: int = 1_000_000
    survival_tol: float = 1e-14
    semi_t_max: int = 10_000
    max_lattice_sites: int = 10_000_000


@dataclass
class QuadratureConfig:
    """Configuration for unit-circle quadrature"""
    quad_tol: float = 1e-10
    max_grid_doublings: int = 16
    base_grid: int = 64
    degenerate_fraction: float = 0.01
    growth_factor: float = 10.0


@dataclass
class VerifyConfig:
    """Configuration for the verification run"""
    n_range: List[int] = field(default_factory=lambda: list(range(2, 11)))
    seed: int = 0x5EED
    lambda_samples: int = 1000
    flaw_samples: int = 50
    lemma_samples: int = 100
    f_audit_grid: int = 4096
    semi_t_max: int = 2000
    workers: int = 1
    show_progress: bool = False


@dataclass
class ReportingConfig:
    """Configuration for output emission"""
    output_format: str = "json"
    float_digits: int = 17
    include_timing: bool = False


@dataclass
class Config:
    """Main configuration class"""
    simulation: SimulationConfig = field(default_factory=SimulationConfig)
    quadrature: QuadratureConfig = field(default_factory=QuadratureConfig)
    verify: VerifyConfig = field(default_factory=VerifyConfig)
    reporting: ReportingConfig = field(default_factory=ReportingConfig)

    # Global settings
    residual_tol: float = 1e-12
    debug: bool = False
    log_level: str = "INFO"

    def tolerance_policy(self) -> TolerancePolicy:
        """
        TolerancePolicy built from the simulation and quadrature sections.

        Raises:
            ConfigError: a tolerance is not strictly positive
        """
        try:
            return TolerancePolicy(
                survival_tol=self.simulation.survival_tol,
                max_steps=self.simulation.max_steps,
                quad_tol=self.quadrature.quad_tol,
                max_grid_doublings=self.quadrature.max_grid_doublings,
                residual_tol=self.residual_tol,
            )
        except InvalidConfiguration as e:
            raise ConfigError(str(e)) from e

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)


SECTIONS = ('simulation', 'quadrature', 'verify', 'reporting')
GLOBAL_KEYS = ('residual_tol', 'debug', 'log_level')


def load_config(config_path: Optional[str] = None) -> Config:
    """
    Load configuration from file, environment variables, and defaults.

    Args:
        config_path: Path to YAML configuration file; config/default.yaml when omitted

    Returns:
        Config: Loaded configuration object

    Raises:
        ConfigError: missing explicit file or a rejected value
    """
    config = Config()

    if config_path is not None and not os.path.exists(config_path):
        raise ConfigError(f"configuration file not found: {config_path}")
    path = config_path or (str(DEFAULT_CONFIG_PATH) if DEFAULT_CONFIG_PATH.exists() else None)

    # Load from file if present
    if path:
        with open(path, 'r', encoding='utf-8') as f:
            yaml_config = yaml.safe_load(f) or {}
        if not isinstance(yaml_config, dict):
            raise ConfigError(f"{path}: top level must be a mapping")
        config = _merge_config(config, yaml_config)

    # Override with environment variables
    config = _load_env_config(config)

    _validate_config(config)
    return config


def _merge_config(config: Config, yaml_config: Dict[str, Any]) -> Config:
    """Merge YAML configuration into config object"""
    for section in SECTIONS:
        if section in yaml_config:
            target = getattr(config, section)
            for key, value in (yaml_config[section] or {}).items():
                if hasattr(target, key):
                    setattr(target, key, value)

    # Global settings
    for key in GLOBAL_KEYS:
        if key in yaml_config:
            setattr(config, key, yaml_config[key])

    return config


def _coerce(current: Any, raw: str) -> Any:
    if isinstance(current, bool):
        return raw.strip().lower() in ('1', 'true', 'yes', 'on')
    if isinstance(current, int):
        return int(raw, 0)
    if isinstance(current, float):
        return float(raw)
    if isinstance(current, list):
        return parse_n_range(raw)
    return raw


def _load_env_config(config: Config) -> Config:
    """
    Load configuration from environment variables.

    WALKRECON_<SECTION>_<KEY> sets a section field (WALKRECON_QUADRATURE_QUAD_TOL),
    WALKRECON_<KEY> a global one (WALKRECON_LOG_LEVEL).
    """
    for section in SECTIONS:
        target = getattr(config, section)
        for key in vars(target):
            raw = os.getenv(f"{ENV_PREFIX}{section.upper()}_{key.upper()}")
            if raw is not None:
                try:
                    setattr(target, key, _coerce(getattr(target, key), raw))
                except ValueError as e:
                    raise ConfigError(f"{ENV_PREFIX}{section.upper()}_{key.upper()}={raw!r}: {e}") from e

    for key in GLOBAL_KEYS:
        raw = os.getenv(f"{ENV_PREFIX}{key.upper()}")
        if raw is not None:
            try:
                setattr(config, key, _coerce(getattr(config, key), raw))
            except ValueError as e:
                raise ConfigError(f"{ENV_PREFIX}{key.upper()}={raw!r}: {e}") from e

    return config


def _validate_config(config: Config) -> None:
    """Reject values no computation can run with"""
    config.tolerance_policy()

    if config.quadrature.base_grid < 2:
        raise ConfigError(f"quadrature.base_grid must be >= 2, got {config.quadrature.base_grid}")
    if not 0 <= config.quadrature.degenerate_fraction < 1:
        raise ConfigError(f"quadrature.degenerate_fraction must lie in [0, 1), got "
                          f"{config.quadrature.degenerate_fraction}")
    if config.quadrature.growth_factor <= 1:
        raise ConfigError(f"quadrature.growth_factor must exceed 1, got {config.quadrature.growth_factor}")
    if config.simulation.semi_t_max < 1 or config.simulation.max_lattice_sites < 1:
        raise ConfigError("simulation.semi_t_max and simulation.max_lattice_sites must be positive")
    if str(config.reporting.output_format).lower() not in OUTPUT_FORMATS:
        raise ConfigError(f"reporting.output_format must be one of {OUTPUT_FORMATS}, "
                          f"got {config.reporting.output_format!r}")
    if not 1 <= config.reporting.float_digits <= 17:
        raise ConfigError(f"reporting.float_digits must lie in 1..17, got {config.reporting.float_digits}")
    if not config.verify.n_range or min(config.verify.n_range) < 2:
        raise ConfigError(f"verify.n_range must be non-empty with N >= 2, got {config.verify.n_range}")
    if config.verify.workers < 1:
        raise ConfigError(f"verify.workers must be >= 1, got {config.verify.workers}")


def parse_n_range(text: str) -> List[int]:
    """
    Parse '2..10', '3' or '2,4,6' into a sorted list of N.

    Raises:
        ValueError: malformed range
    """
    text = str(text).strip()
    if '..' in text:
        lo, hi = (int(part) for part in text.split('..', 1))
        if hi < lo:
            raise ValueError(f"empty range {text!r}")
        return list(range(lo, hi + 1))
    return sorted({int(part) for part in text.split(',') if part.strip()})


def save_config(config: Config, config_path: str) -> None:
    """
    Save configuration to YAML file.

    Args:
        config: Configuration object to save
        config_path: Path where to save the configuration
    """
    os.makedirs(Path(config_path).parent, exist_ok=True)
    with open(config_path, 'w', encoding='utf-8') as f:
        yaml.dump(config.to_dict(), f, default_flow_style=False, allow_unicode=True)
