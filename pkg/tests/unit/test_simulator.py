"""
Unit tests for the time-domain simulator
"""

import math

import numpy as np
import pytest

from src.walkrecon.core.errors import CapacityError, InvalidConfiguration
from src.walkrecon.core.types import (
    STATE_L,
    STATE_R,
    TolerancePolicy,
    WalkConfig,
    coin_from_matrix,
    global_phase,
    hadamard_coin,
    random_qubit,
)
from src.walkrecon.simulator import (
    BoundarySite,
    WalkSimulator,
    WaveState,
    boundary_series,
    hitting_amplitude_series,
    run_finite_absorption,
    run_semi_infinite_absorption,
    step_walk,
)

X_COIN = [[0, 1], [1, 0]]
IDENTITY_COIN = [[1, 0], [0, 1]]


class TestStepWalk:
    """Test cases for a single evolution step"""

    def test_interior_step_preserves_norm(self, symmetric_state):
        state = WaveState.localized(11, 5, symmetric_state.vector)
        evolved = step_walk(step_walk(state, hadamard_coin()), hadamard_coin())
        assert evolved.norm == pytest.approx(1.0, abs=1e-14)
        assert evolved.time == 2

    def test_shift_directions(self):
        """Test that the L output moves left and the R output moves right"""
        state = WaveState.localized(5, 2, STATE_R.vector)
        evolved = step_walk(state, hadamard_coin())
        amps = evolved.amplitudes
        assert amps[1, 0] == pytest.approx(1 / math.sqrt(2))
        assert amps[3, 1] == pytest.approx(-1 / math.sqrt(2))
        assert np.count_nonzero(np.abs(amps) > 0) == 2

    def test_norm_conserved_on_random_states(self, rng):
        """Test that one step keeps the squared norm for random interior states and coins"""
        for _ in range(20):
            amps = np.zeros((12, 2), dtype=np.complex128)
            amps[1:-1] = rng.normal(size=(10, 2)) + 1j * rng.normal(size=(10, 2))
            amps /= np.linalg.norm(amps)
            q, _ = np.linalg.qr(rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2)))
            for coin in (hadamard_coin(), coin_from_matrix(q, name="random")):
                evolved = step_walk(WaveState(amps), coin)
                assert abs(evolved.norm - 1.0) < 1e-13

    def test_linearity(self, rng):
        """Test that stepping a superposition equals the superposition of the steps"""
        coin = hadamard_coin()
        for _ in range(10):
            psi, phi = (WaveState.localized(9, x, random_qubit(rng).vector) for x in (3, 5))
            a, b = 0.5 * np.exp(1j * rng.uniform(0, 2 * np.pi, size=2))
            mixed = WaveState(a * psi.amplitudes + b * phi.amplitudes)
            expected = a * step_walk(psi, coin).amplitudes + b * step_walk(phi, coin).amplitudes
            assert np.max(np.abs(step_walk(mixed, coin).amplitudes - expected)) < 1e-13

    def test_rejects_bad_shape(self):
        with pytest.raises(InvalidConfiguration):
            WaveState(np.zeros((4, 3)))


class TestFiniteAbsorption:
    """Test cases for runs between two barriers"""

    def test_base_case_n2(self):
        """Test that N = 2 splits exactly in half after one step"""
        outcome, stream = run_finite_absorption(WalkConfig.finite(2, 1, STATE_R))
        assert abs(outcome.p_left - 0.5) < 1e-15
        assert abs(outcome.p_right - 0.5) < 1e-15
        assert outcome.steps_used == 1
        assert outcome.converged
        assert len(stream.left) == 1 and len(stream.right) == 1

    def test_n3_gives_two_thirds(self, two_thirds):
        outcome, _ = run_finite_absorption(WalkConfig.finite(3, 1, STATE_R))
        assert outcome.converged
        assert outcome.p_left == pytest.approx(two_thirds, abs=1e-10)

    def test_n3_symmetric_state_always_left(self, symmetric_state):
        """Test that the symmetric state is absorbed at 0 with certainty for N = 3"""
        outcome, _ = run_finite_absorption(WalkConfig.finite(3, 1, symmetric_state))
        assert outcome.p_left == pytest.approx(1.0, abs=1e-10)

    @pytest.mark.parametrize("N,k", [(4, 1), (5, 2), (7, 6)])
    def test_probability_accounting(self, N, k, rng):
        outcome, _ = run_finite_absorption(WalkConfig.finite(N, k, random_qubit(rng)))
        assert outcome.accounting_residual < 1e-12
        assert outcome.p_left + outcome.p_right == pytest.approx(1.0, abs=1e-12)

    def test_hitting_amplitudes_are_linear(self, rng):
        """Test that hits for alpha|L> + beta|R> are alpha hits(L) + beta hits(R), record by record"""
        tol = TolerancePolicy(survival_tol=1e-300, max_steps=200)
        qubit = random_qubit(rng)
        alpha, beta = qubit.vector

        def left_hits(state):
            return boundary_series(WalkConfig.finite(5, 2, state), tol).dense(201)

        expected = alpha * left_hits(STATE_L) + beta * left_hits(STATE_R)
        assert np.max(np.abs(left_hits(qubit) - expected)) < 1e-12

    @pytest.mark.parametrize("N,k", [(3, 1), (5, 2), (6, 4)])
    def test_global_phase_invariance(self, N, k, rng):
        qubit = random_qubit(rng)
        phased = global_phase(qubit, np.exp(1j * rng.uniform(0, 2 * np.pi)))
        plain, _ = run_finite_absorption(WalkConfig.finite(N, k, qubit))
        rotated, _ = run_finite_absorption(WalkConfig.finite(N, k, phased))
        assert abs(plain.p_left - rotated.p_left) < 1e-12
        assert abs(plain.p_right - rotated.p_right) < 1e-12

    @pytest.mark.parametrize("N,k", [(3, 1), (6, 3), (7, 2)])
    def test_hit_parity_at_every_time(self, N, k, rng):
        """Test that every left hit has the parity of k and every right hit the parity of N - k"""
        _, stream = run_finite_absorption(WalkConfig.finite(N, k, random_qubit(rng)))
        assert len(stream.left) > 3
        assert np.all(stream.left.times % 2 == k % 2)
        assert np.all(stream.right.times % 2 == (N - k) % 2)

    def test_step_cap_reports_unconverged(self):
        """Test that an exhausted step budget returns the partial outcome"""
        tol = TolerancePolicy(max_steps=3)
        outcome, _ = run_finite_absorption(WalkConfig.finite(6, 3, STATE_R), tol)
        assert not outcome.converged
        assert outcome.steps_used == 3
        assert outcome.survival > 0.0
        assert outcome.accounting_residual < 1e-12

    def test_general_coin(self):
        """Test the X coin, which sends |R> at site 1 straight to 0"""
        coin = coin_from_matrix(X_COIN, name="x")
        outcome, _ = run_finite_absorption(WalkConfig.finite(3, 1, STATE_R, coin))
        assert outcome.p_left == pytest.approx(1.0)
        assert outcome.steps_used == 1

    def test_identity_coin_drifts_right(self):
        coin = coin_from_matrix(IDENTITY_COIN, name="identity")
        outcome, _ = run_finite_absorption(WalkConfig.finite(3, 1, STATE_R, coin))
        assert outcome.p_right == pytest.approx(1.0)
        assert outcome.steps_used == 2

    def test_hitting_series(self):
        """Test that the left series reproduces p_left and its time layout"""
        outcome, stream = run_finite_absorption(WalkConfig.finite(3, 1, STATE_R))
        left = stream.left
        assert left.site is BoundarySite.LEFT
        assert left.total_probability == pytest.approx(outcome.p_left, abs=1e-13)
        assert list(left.times[:3]) == [1, 3, 5]
        dense = left.dense()
        assert dense.shape == (left.last_time + 1, 2)
        assert np.all(dense[0] == 0) and np.all(dense[2] == 0)

    def test_stream_ordering(self):
        _, stream = run_finite_absorption(WalkConfig.finite(4, 2, STATE_R))
        times = [record.time for record in stream]
        assert times == sorted(times)

    def test_series_helpers(self):
        config = WalkConfig.finite(3, 1, STATE_R)
        records = hitting_amplitude_series(config)
        series = boundary_series(config)
        assert len(records) == len(series)
        assert records[0].probability == pytest.approx(0.5)

    def test_semi_infinite_config_rejected(self):
        with pytest.raises(InvalidConfiguration):
            run_finite_absorption(WalkConfig.semi_infinite(1))


class TestSemiInfiniteAbsorption:
    """Test cases for runs with a single barrier"""

    def test_approaches_two_over_pi(self):
        outcome = run_semi_infinite_absorption(WalkConfig.semi_infinite(1, STATE_R), 2000)
        assert outcome.p_right == 0.0
        assert outcome.p_left == pytest.approx(2 / math.pi, abs=1e-2)
        assert outcome.metadata['t_max'] == 2000

    def test_richardson_estimate(self):
        """Test that the extrapolated value is 2 P(t) - P(t/2)"""
        outcome = run_semi_infinite_absorption(WalkConfig.semi_infinite(1, STATE_R), 400, extrapolate=True)
        assert outcome.p_left_half is not None
        assert outcome.extrapolated == pytest.approx(2 * outcome.p_left - outcome.p_left_half, abs=1e-14)

    def test_survival_is_lattice_norm(self):
        """Test against a step-by-step evolution that clears site 0 after each step"""
        outcome = run_semi_infinite_absorption(WalkConfig.semi_infinite(2, STATE_L), 30)
        state = WaveState.localized(34, 2, STATE_L.vector)
        absorbed = 0.0
        for _ in range(30):
            amps = step_walk(state, hadamard_coin()).amplitudes
            absorbed += float(np.sum(np.abs(amps[0]) ** 2))
            amps[0] = 0.0
            state = WaveState(amps, state.time + 1)
        assert outcome.p_left == pytest.approx(absorbed, abs=1e-14)
        assert outcome.survival == pytest.approx(state.norm, abs=1e-14)

    def test_capacity_error(self):
        with pytest.raises(CapacityError) as excinfo:
            run_semi_infinite_absorption(WalkConfig.semi_infinite(1), 100, max_sites=50)
        assert excinfo.value.limit == 50

    def test_accounting(self):
        outcome = run_semi_infinite_absorption(WalkConfig.semi_infinite(3, STATE_L), 300)
        assert outcome.p_left + outcome.survival == pytest.approx(1.0, abs=1e-12)

    def test_bad_step_count(self):
        with pytest.raises(InvalidConfiguration):
            run_semi_infinite_absorption(WalkConfig.semi_infinite(1), 0)


class TestWalkSimulator:
    """Test cases for the simulator coordinator"""

    def test_statistics(self):
        simulator = WalkSimulator()
        simulator.p_left(3)
        simulator.p_left(2)
        stats = simulator.get_statistics()
        assert stats['runs_completed'] == 2
        assert stats['unconverged_runs'] == 0

    def test_batch_order(self, small_config, two_thirds):
        """Test that threaded batches come back in job order"""
        small_config.verify.workers = 3
        simulator = WalkSimulator(small_config)
        values = simulator.batch_p_left([(3, 1, STATE_R), (2, 1, STATE_R), (3, 1, STATE_R)])
        assert values == pytest.approx([two_thirds, 0.5, two_thirds], abs=1e-10)

    def test_semi_default_from_config(self, small_config):
        small_config.simulation.semi_t_max = 50
        outcome = WalkSimulator(small_config).semi_infinite()
        assert outcome.steps_used == 50
