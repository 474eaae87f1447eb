"""
Pytest configuration and fixtures for walkrecon tests
"""

import math
import os
import shutil
import tempfile

import numpy as np
import pytest
import yaml

from src.walkrecon.config import Config
from src.walkrecon.core.types import SQRT1_2, TolerancePolicy, make_qubit


@pytest.fixture
def temp_dir():
    """Create a temporary directory for tests"""
    temp_dir = tempfile.mkdtemp()
    yield temp_dir
    shutil.rmtree(temp_dir, ignore_errors=True)


@pytest.fixture
def tol():
    """Default tolerance policy"""
    return TolerancePolicy()


@pytest.fixture
def rng():
    """Seeded generator so sampled tests are reproducible"""
    return np.random.default_rng(0x5EED)


@pytest.fixture
def symmetric_state():
    return make_qubit(SQRT1_2, SQRT1_2)


@pytest.fixture
def antisymmetric_state():
    return make_qubit(SQRT1_2, -SQRT1_2)


@pytest.fixture
def small_config():
    """Config with sample counts small enough for unit tests"""
    config = Config()
    config.verify.n_range = [2, 3]
    config.verify.lambda_samples = 50
    config.verify.flaw_samples = 10
    config.verify.lemma_samples = 10
    config.verify.f_audit_grid = 512
    config.verify.semi_t_max = 400
    return config


@pytest.fixture
def mock_config_file(temp_dir):
    """YAML configuration file overriding a few values"""
    config_data = {
        'simulation': {'max_steps': 5000, 'semi_t_max': 300},
        'quadrature': {'quad_tol': 1e-9},
        'verify': {'seed': 42, 'n_range': [2, 3, 4]},
        'reporting': {'output_format': 'table'},
        'log_level': 'WARNING',
    }
    config_path = os.path.join(temp_dir, 'walkrecon.yaml')
    with open(config_path, 'w', encoding='utf-8') as f:
        yaml.dump(config_data, f)
    return config_path


@pytest.fixture
def two_thirds():
    return 2.0 / 3.0


@pytest.fixture
def inverse_sqrt2():
    return 1.0 / math.sqrt(2.0)
