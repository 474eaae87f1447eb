"""
Unit tests for periodic midpoint quadrature
"""

import math

import numpy as np
import pytest

from src.walkrecon.absorption import QuadStatus, circle_quadrature, midpoint_nodes
from src.walkrecon.core.errors import DegeneratePoint
from src.walkrecon.core.types import TolerancePolicy


class TestMidpointNodes:
    """Test cases for node placement"""

    def test_nodes_avoid_zero(self):
        nodes = midpoint_nodes(4)
        assert nodes.tolist() == pytest.approx([math.pi / 4, 3 * math.pi / 4, 5 * math.pi / 4, 7 * math.pi / 4])

    def test_shift(self):
        assert midpoint_nodes(8, 0.25)[0] == pytest.approx(2 * math.pi * 0.75 / 8)


class TestCircleQuadrature:
    """Test cases for the adaptive integrator"""

    def test_constant(self):
        report = circle_quadrature(lambda t: np.ones_like(t))
        assert report.status is QuadStatus.CONVERGED
        assert report.value == pytest.approx(2 * math.pi, abs=1e-12)
        assert report.grid_size == 128
        assert report.mean == pytest.approx(1.0)

    def test_cos_squared(self):
        report = circle_quadrature(lambda t: np.cos(t) ** 2)
        assert report.converged
        assert report.value.real == pytest.approx(math.pi, abs=1e-12)

    def test_smooth_rational(self):
        """Test the integral of 1/|2 - e^{i theta}|^2, which is 2 pi / 3"""
        report = circle_quadrature(lambda t: 1.0 / np.abs(2.0 - np.exp(1j * t)) ** 2)
        assert report.converged
        assert report.value.real == pytest.approx(2 * math.pi / 3, abs=1e-10)
        assert report.error_estimate < 1e-10

    def test_pole_on_contour_diverges(self):
        """Test that 1/|1 - e^{i theta}|^2 is reported, not regularized"""
        report = circle_quadrature(lambda t: 1.0 / np.abs(1.0 - np.exp(1j * t)) ** 2)
        assert report.status is QuadStatus.DIVERGED
        assert not report.converged
        assert min(report.singular_angle, 2 * math.pi - report.singular_angle) < 1e-8
        assert report.to_dict()["singular_angle"] == report.singular_angle

    def test_pole_near_contour_converges(self):
        """Test that a slowly converging integrand is not mistaken for a divergent one"""
        rho = 1.003
        report = circle_quadrature(lambda t: 1.0 / np.abs(rho - np.exp(1j * t)) ** 2)
        assert report.status is QuadStatus.CONVERGED
        assert report.value.real == pytest.approx(2 * math.pi / (rho ** 2 - 1), rel=1e-9)
        assert report.singular_angle is None

    def test_rational_poles_diverge(self):
        """Test that |z^3 / (2z^4 - 3z^2 + 2)|^2 diverges at one of its four contour poles"""
        def integrand(t):
            z = np.exp(1j * t)
            return np.abs(z ** 3 / (2 * z ** 4 - 3 * z ** 2 + 2)) ** 2

        report = circle_quadrature(integrand)
        assert report.status is QuadStatus.DIVERGED
        half = 0.5 * math.atan2(math.sqrt(7.0), 3.0)
        poles = [half, math.pi - half, math.pi + half, 2 * math.pi - half]
        assert min(abs(report.singular_angle - pole) for pole in poles) < 1e-8

    def test_two_successive_blowups_diverge(self):
        """Test that two tenfold growths in a row end the doubling"""
        report = circle_quadrature(lambda t: np.full(t.shape, float(len(t)) ** 4))
        assert report.status is QuadStatus.DIVERGED
        assert report.grid_size == 256
        assert len(report.history) == 3
        assert report.singular_angle is None

    def test_isolated_blowups_reset(self):
        """Test that a tenfold jump followed by a calm doubling does not count towards divergence"""
        levels = {64: 1.0, 128: 20.0, 256: 25.0, 512: 600.0, 1024: 700.0}
        report = circle_quadrature(lambda t: np.full(t.shape, levels.get(len(t), 700.0)))
        assert report.status is QuadStatus.CONVERGED
        assert report.grid_size == 2048
        assert report.value.real == pytest.approx(2 * math.pi * 700.0)

    @pytest.mark.parametrize("m", [m for m in range(-63, 64) if m != 0])
    def test_fourier_modes_vanish(self, m):
        report = circle_quadrature(lambda t: np.exp(1j * m * t))
        assert report.converged
        assert abs(report.value) < 1e-12

    def test_constant_mode(self):
        report = circle_quadrature(lambda t: np.exp(0j * t))
        assert abs(report.value - 2 * math.pi) < 1e-12

    def test_all_nodes_undefined(self):
        report = circle_quadrature(lambda t: np.full_like(t, np.nan))
        assert report.status is QuadStatus.DEGENERATE_NODES
        assert report.retried_offset

    def test_single_bad_node_retried(self):
        """Test that one undefined node is handled by the shifted grid"""
        bad_node = midpoint_nodes(64)[0]
        report = circle_quadrature(lambda t: np.where(np.isclose(t, bad_node), np.nan, 1.0))
        assert report.converged
        assert report.retried_offset
        assert report.value == pytest.approx(2 * math.pi)

    def test_budget_exhausted(self):
        """Test that a slowly converging integrand runs out of doublings"""
        tol = TolerancePolicy(max_grid_doublings=1)
        report = circle_quadrature(lambda t: np.sqrt(np.abs(np.sin(t))), tol)
        assert report.status is QuadStatus.EXHAUSTED
        assert report.grid_size == 128
        assert len(report.history) == 2

    def test_scalar_integrand(self):
        """Test node-by-node evaluation with DegeneratePoint marking a node"""
        def integrand(theta):
            if abs(theta - midpoint_nodes(64)[3]) < 1e-15:
                raise DegeneratePoint(theta, "test node")
            return math.cos(theta) ** 2

        report = circle_quadrature(integrand, vectorized=False)
        assert report.converged
        assert report.value.real == pytest.approx(math.pi, abs=1e-12)

    def test_report_dict(self):
        report = circle_quadrature(lambda t: np.ones_like(t))
        data = report.to_dict()
        assert data['status'] == "Converged"
        assert data['doublings'] == 1
        assert data['retried_offset'] is False
