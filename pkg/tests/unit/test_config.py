"""
Unit tests for configuration management
"""

import os

import pytest
import yaml

from src.walkrecon.config import Config, load_config, parse_n_range, save_config
from src.walkrecon.core.errors import ConfigError


class TestConfig:
    """Test cases for the Config dataclass"""

    def test_default_config_creation(self):
        """Test creation with default configuration"""
        config = Config()
        assert config.simulation.max_steps == 1_000_000
        assert config.quadrature.quad_tol == 1e-10
        assert config.verify.n_range == list(range(2, 11))
        assert config.reporting.output_format == 'json'
        assert config.reporting.include_timing is False

    def test_tolerance_policy(self):
        tol = Config().tolerance_policy()
        assert tol.survival_tol == 1e-14
        assert tol.max_grid_doublings == 16

    def test_bad_tolerance_is_config_error(self):
        config = Config()
        config.quadrature.quad_tol = -1.0
        with pytest.raises(ConfigError):
            config.tolerance_policy()

    def test_to_dict(self):
        data = Config().to_dict()
        assert set(data) >= {'simulation', 'quadrature', 'verify', 'reporting', 'log_level'}


class TestLoadConfig:
    """Test cases for file and environment loading"""

    def test_config_from_file(self, mock_config_file):
        """Test configuration loading from file"""
        config = load_config(mock_config_file)
        assert config.simulation.max_steps == 5000
        assert config.simulation.semi_t_max == 300
        assert config.quadrature.quad_tol == 1e-9
        assert config.verify.seed == 42
        assert config.verify.n_range == [2, 3, 4]
        assert config.reporting.output_format == 'table'
        assert config.log_level == 'WARNING'
        # untouched values keep their defaults
        assert config.quadrature.base_grid == 64

    def test_missing_explicit_file(self, temp_dir):
        with pytest.raises(ConfigError):
            load_config(os.path.join(temp_dir, 'absent.yaml'))

    def test_non_mapping_file(self, temp_dir):
        path = os.path.join(temp_dir, 'list.yaml')
        with open(path, 'w', encoding='utf-8') as f:
            f.write('- 1\n- 2\n')
        with pytest.raises(ConfigError):
            load_config(path)

    def test_unknown_keys_ignored(self, temp_dir):
        path = os.path.join(temp_dir, 'extra.yaml')
        with open(path, 'w', encoding='utf-8') as f:
            yaml.dump({'simulation': {'colour': 'blue'}, 'unrelated': 1}, f)
        config = load_config(path)
        assert not hasattr(config.simulation, 'colour')

    def test_environment_override(self, mock_config_file, monkeypatch):
        """Test that environment variables win over the file"""
        monkeypatch.setenv('WALKRECON_QUADRATURE_QUAD_TOL', '1e-8')
        monkeypatch.setenv('WALKRECON_VERIFY_SEED', '0x10')
        monkeypatch.setenv('WALKRECON_VERIFY_N_RANGE', '3..5')
        monkeypatch.setenv('WALKRECON_VERIFY_SHOW_PROGRESS', 'yes')
        monkeypatch.setenv('WALKRECON_LOG_LEVEL', 'DEBUG')
        config = load_config(mock_config_file)
        assert config.quadrature.quad_tol == 1e-8
        assert config.verify.seed == 16
        assert config.verify.n_range == [3, 4, 5]
        assert config.verify.show_progress is True
        assert config.log_level == 'DEBUG'

    def test_bad_environment_value(self, mock_config_file, monkeypatch):
        monkeypatch.setenv('WALKRECON_SIMULATION_MAX_STEPS', 'many')
        with pytest.raises(ConfigError):
            load_config(mock_config_file)

    @pytest.mark.parametrize("section,key,value", [
        ('quadrature', 'base_grid', 1),
        ('quadrature', 'degenerate_fraction', 1.5),
        ('quadrature', 'growth_factor', 1.0),
        ('reporting', 'output_format', 'xml'),
        ('reporting', 'float_digits', 30),
        ('verify', 'n_range', [1, 2]),
        ('verify', 'workers', 0),
        ('simulation', 'survival_tol', 0.0),
    ])
    def test_validation(self, temp_dir, section, key, value):
        path = os.path.join(temp_dir, 'bad.yaml')
        with open(path, 'w', encoding='utf-8') as f:
            yaml.dump({section: {key: value}}, f)
        with pytest.raises(ConfigError):
            load_config(path)

    def test_save_and_reload(self, temp_dir):
        config = Config()
        config.verify.seed = 7
        config.reporting.output_format = 'csv'
        path = os.path.join(temp_dir, 'nested', 'saved.yaml')
        save_config(config, path)
        reloaded = load_config(path)
        assert reloaded.verify.seed == 7
        assert reloaded.reporting.output_format == 'csv'


class TestParseNRange:
    """Test cases for N range parsing"""

    def test_forms(self):
        assert parse_n_range('2..5') == [2, 3, 4, 5]
        assert parse_n_range('3') == [3]
        assert parse_n_range('6, 2,4') == [2, 4, 6]

    def test_empty_range(self):
        with pytest.raises(ValueError):
            parse_n_range('5..2')
