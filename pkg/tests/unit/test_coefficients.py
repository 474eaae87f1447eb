"""
Unit tests for absorption probabilities from unit-circle integrals
"""

import math

import pytest

from src.walkrecon.absorption import (
    QuadStatus,
    absorption_from_c123,
    compute_c123,
    corollary_p1N,
    general_p1N_formula,
    semi_infinite_closed_form,
    theorem_absorption,
)
from src.walkrecon.core.errors import DivergedInput, InvalidConfiguration
from src.walkrecon.core.types import STATE_L, STATE_R, WalkConfig, random_qubit
from src.walkrecon.genfunc import GFMethod
from src.walkrecon.simulator import run_finite_absorption


class TestCoefficientIntegrals:
    """Test cases for c1, c2, c3"""

    def test_n2_values(self):
        """Test that p = z, r = 0 gives c1 = c2 = c3 = 1/2"""
        coeffs = compute_c123(2, 1)
        assert coeffs.converged
        assert coeffs.c1 == pytest.approx(0.5, abs=1e-12)
        assert coeffs.c2 == pytest.approx(0.5, abs=1e-12)
        assert coeffs.c3 == pytest.approx(0.5, abs=1e-12)

    def test_n3_solve(self, two_thirds, symmetric_state):
        prob, coeffs = theorem_absorption(3, 1, STATE_R)
        assert coeffs.method is GFMethod.SOLVE
        assert prob == pytest.approx(two_thirds, abs=1e-9)
        assert absorption_from_c123(coeffs, symmetric_state) == pytest.approx(1.0, abs=1e-9)

    def test_basis_states_sum(self):
        """Test that c1 + c2 is the sum of the |L> and |R> probabilities"""
        coeffs = compute_c123(4, 2)
        total = absorption_from_c123(coeffs, STATE_L) + absorption_from_c123(coeffs, STATE_R)
        assert total == pytest.approx(coeffs.c1 + coeffs.c2)

    def test_cauchy_schwarz(self):
        coeffs = compute_c123(5, 2)
        assert abs(coeffs.c3) ** 2 <= coeffs.c1 * coeffs.c2 + 1e-8
        assert coeffs.imag_residue['c1'] < 1e-10

    @pytest.mark.parametrize("N", range(2, 9))
    def test_matches_simulator(self, N, rng):
        """Test the c1, c2, c3 form against finite simulation on random coin states"""
        k = max(1, N // 2)
        coeffs = compute_c123(N, k)
        assert coeffs.converged
        for _ in range(20):
            qubit = random_qubit(rng)
            outcome, _ = run_finite_absorption(WalkConfig.finite(N, k, qubit))
            assert outcome.converged
            assert absorption_from_c123(coeffs, qubit) == pytest.approx(outcome.p_left, abs=1e-9)

    def test_diverged_input(self):
        """Test that the shared-coefficient form diverges on the circle for N = 3"""
        coeffs = compute_c123(3, 1, GFMethod.LEMMA)
        assert not coeffs.converged
        assert coeffs.to_dict()['c1'] is None
        with pytest.raises(DivergedInput):
            absorption_from_c123(coeffs, STATE_R)
        prob, _ = theorem_absorption(3, 1, STATE_R, GFMethod.LEMMA)
        assert prob is None

    def test_series_not_on_circle(self):
        with pytest.raises(InvalidConfiguration):
            compute_c123(3, 1, GFMethod.SERIES)


class TestCorollary:
    """Test cases for the k = 1, |R> corollary"""

    def test_n3(self, two_thirds):
        value, report = corollary_p1N(3)
        assert report.status is QuadStatus.CONVERGED
        assert value == pytest.approx(two_thirds, abs=1e-9)

    def test_n2(self):
        value, _ = corollary_p1N(2)
        assert value == pytest.approx(0.5, abs=1e-12)

    def test_lemma_diverges(self):
        value, report = corollary_p1N(3, GFMethod.LEMMA)
        assert value is None
        assert report.status is QuadStatus.DIVERGED

    def test_general_state_formula(self, symmetric_state, antisymmetric_state, two_thirds):
        assert general_p1N_formula(1.0 / 3.0, STATE_R) == pytest.approx(two_thirds)
        assert general_p1N_formula(1.0 / 3.0, symmetric_state) == pytest.approx(1.0)
        assert general_p1N_formula(1.0 / 3.0, antisymmetric_state) == pytest.approx(1.0 / 3.0)

    def test_bad_N(self):
        with pytest.raises(InvalidConfiguration):
            corollary_p1N(1)


class TestSemiInfiniteClosedForm:
    """Test cases for the single-barrier closed form"""

    def test_basis_state(self):
        assert semi_infinite_closed_form(STATE_R) == pytest.approx(2 / math.pi)

    def test_symmetric_state(self, symmetric_state):
        assert semi_infinite_closed_form(symmetric_state) == pytest.approx(1.0)
