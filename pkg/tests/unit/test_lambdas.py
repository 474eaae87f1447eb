"""
Unit tests for the characteristic values lambda_+ and lambda_-
"""

import cmath
import math

import numpy as np
import pytest

from src.walkrecon.core.errors import DegeneratePoint, InvalidConfiguration
from src.walkrecon.genfunc import lambda_pm, lambda_pm_array


class TestLambdaPm:
    """Test cases for the scalar evaluation"""

    @pytest.mark.parametrize("z", [0.5, 0.3 + 0.4j, 1j, -0.7 + 0.1j, 2.0 - 1.0j])
    def test_product_and_sum(self, z):
        pair = lambda_pm(z)
        assert abs(pair.product + 1.0) < 1e-12
        assert abs(pair.total - math.sqrt(2) * (z - 1 / z)) < 1e-12

    def test_other_branch_swaps(self):
        """Test that branch -1 exchanges the two roots"""
        z = 0.4 + 0.2j
        principal = lambda_pm(z)
        other = lambda_pm(z, branch=-1)
        assert other.lambda_plus == pytest.approx(principal.lambda_minus)
        assert other.swapped() == principal or abs(other.swapped().lambda_plus - principal.lambda_plus) < 1e-15

    def test_sampled_identities(self, rng):
        z = rng.uniform(-2, 2, 200) + 1j * rng.uniform(-2, 2, 200)
        lp, lm = lambda_pm_array(z)
        assert np.max(np.abs(lp * lm + 1.0)) < 1e-12
        assert np.max(np.abs(lp + lm - math.sqrt(2) * (z - 1 / z))) < 1e-11

    @pytest.mark.parametrize("z", [0.0, cmath.exp(1j * math.pi / 4), cmath.exp(3j * math.pi / 4)])
    def test_degenerate_points(self, z):
        with pytest.raises(DegeneratePoint):
            lambda_pm(z)

    def test_array_marks_degenerate_entries(self):
        lp, lm = lambda_pm_array(np.array([0.0, 0.5]))
        assert np.isnan(lp[0]) and np.isnan(lm[0])
        assert np.isfinite(lp[1])

    def test_bad_branch(self):
        with pytest.raises(InvalidConfiguration):
            lambda_pm(0.5, branch=2)
