"""
Unit tests for the command-line interface
"""

import json

import pytest
from click.testing import CliRunner

from src.walkrecon import __version__
from src.walkrecon.main import EXIT_FINDING, cli


@pytest.fixture
def runner():
    return CliRunner()


def run_json(runner, args, exit_code=0):
    result = runner.invoke(cli, args)
    assert result.exit_code == exit_code, result.output
    return json.loads(result.stdout)


class TestCommands:
    """Test cases for individual subcommands"""

    def test_simulate_base_case(self, runner):
        data = run_json(runner, ['simulate', '--n', '2'])
        assert data['command'] == 'simulate'
        assert data['results']['p_left'] == 0.5
        assert data['results']['steps_used'] == 1
        assert (data['params']['N'], data['params']['k']) == (2, 1)
        assert data['tolerances']['quad_tol'] == 1e-10

    def test_simulate_n3(self, runner, two_thirds):
        data = run_json(runner, ['simulate', '--n', '3', '--state', 'R'])
        assert data['results']['p_left'] == pytest.approx(two_thirds, abs=1e-10)
        assert data['wall_time_ms'] is None

    def test_semi_extrapolate(self, runner):
        data = run_json(runner, ['semi', '--tmax', '200', '--extrapolate'])
        assert data['results']['t_max'] == 200
        assert 'extrapolated' in data['results']

    def test_gf_solve_at_i(self, runner):
        data = run_json(runner, ['gf', '--method', 'solve', '--n', '3', '--k', '1', '--z', '0,1'])
        assert data['results']['r']['re'] == pytest.approx(0.0, abs=1e-13)
        assert data['results']['r']['im'] == pytest.approx(-1 / 3, abs=1e-13)
        assert data['results']['max_residual'] < 1e-12

    def test_absorb(self, runner, two_thirds):
        data = run_json(runner, ['absorb', '--n', '3'])
        row = data['results']['rows'][0]
        assert row['probability'] == pytest.approx(two_thirds, abs=1e-9)
        assert row['status_c1'] == 'Converged'

    def test_corollary_lemma_diverges(self, runner):
        """Test that a diverged quadrature prints its envelope and exits 3"""
        data = run_json(runner, ['corollary', '--n', '3', '--method', 'lemma'], EXIT_FINDING)
        assert data['results']['rows'][0]['value'] is None
        assert data['results']['rows'][0]['status'] == 'Diverged'

    def test_corollary_with_state(self, runner):
        data = run_json(runner, ['corollary', '--n', '3', '--state', '0.7071067811865476,0,0.7071067811865476,0'])
        assert data['results']['rows'][0]['value_for_state'] == pytest.approx(1.0, abs=1e-9)

    def test_conjecture_csv(self, runner):
        result = runner.invoke(cli, ['conjecture', '--max-n', '5', '--format', 'csv'])
        assert result.exit_code == 0
        assert result.stdout.splitlines() == ['N,value', '1,0/1', '2,1/2', '3,2/3', '4,7/10', '5,12/17']

    def test_conjecture_table(self, runner):
        result = runner.invoke(cli, ['--format', 'table', 'conjecture', '--max-n', '3'])
        assert result.exit_code == 0
        assert result.stdout.splitlines()[-1].split() == ['3', '2/3']

    def test_poles_is_a_finding(self, runner):
        data = run_json(runner, ['poles'], EXIT_FINDING)
        assert len(data['results']['rows']) == 4
        assert data['results']['quadrature']['status'] != 'Converged'

    def test_flaw(self, runner):
        data = run_json(runner, ['flaw', '--samples', '10'])
        assert data['results']['konno_r13_vanishes'] is True

    def test_flaw_csv_unsupported(self, runner):
        result = runner.invoke(cli, ['flaw', '--format', 'csv'])
        assert result.exit_code == 2

    def test_faudit(self, runner):
        data = run_json(runner, ['faudit', '--grid', '256'])
        assert data['results']['local_antiderivative_valid'] is False

    def test_parseval(self, runner):
        data = run_json(runner, ['parseval', '--n-values', '3'])
        assert data['results']['complete'] is True

    def test_validate_config(self, runner, mock_config_file):
        data = run_json(runner, ['--config', mock_config_file, 'validate-config', '--format', 'json'])
        assert data['results']['verify']['seed'] == 42
        assert data['results']['simulation']['max_steps'] == 5000


class TestOptions:
    """Test cases for global flags and error mapping"""

    def test_version(self, runner):
        result = runner.invoke(cli, ['--version'])
        assert result.exit_code == 0
        assert __version__ in result.output

    def test_timing(self, runner):
        data = run_json(runner, ['simulate', '--n', '2', '--timing'])
        assert isinstance(data['wall_time_ms'], int)

    def test_seed_hex(self, runner):
        data = run_json(runner, ['--seed', '0x10', 'flaw', '--samples', '5'])
        assert data['params']['seed'] == 16

    def test_bad_seed(self, runner):
        assert runner.invoke(cli, ['--seed', 'abc', 'flaw']).exit_code == 2

    def test_unnormalized_state(self, runner):
        assert runner.invoke(cli, ['simulate', '--n', '3', '--state', '1,0,1,0']).exit_code == 2

    def test_start_site_out_of_range(self, runner):
        assert runner.invoke(cli, ['simulate', '--n', '3', '--k', '5']).exit_code == 2

    def test_degenerate_z(self, runner):
        assert runner.invoke(cli, ['gf', '--method', 'lemma', '--n', '3', '--z', '0,0']).exit_code == 2

    def test_missing_config_file(self, runner, temp_dir):
        assert runner.invoke(cli, ['--config', f'{temp_dir}/absent.yaml', 'poles']).exit_code == 2

    def test_byte_identical_output(self, runner):
        first = runner.invoke(cli, ['conjecture', '--max-n', '8'])
        second = runner.invoke(cli, ['conjecture', '--max-n', '8'])
        assert first.stdout == second.stdout
