"""
Unit tests for the two closed-form generating functions
"""

import math

import numpy as np
import pytest

from src.walkrecon.core.errors import DegeneratePoint, InvalidConfiguration
from src.walkrecon.genfunc import (
    GFMethod,
    evaluate_gf,
    konno_coefficients,
    konno_gf,
    lemma_coefficients,
    lemma_gf,
    lemma_pr_array,
    recursion_residual,
)


class TestLemmaForm:
    """Test cases for the shared-coefficient closed form"""

    def test_r1_at_i_for_n3(self):
        value = lemma_gf(1j, 3, 1)
        assert value.method is GFMethod.LEMMA
        assert abs(value.r - (-1j / 7)) < 1e-12

    def test_coefficients_at_one(self):
        """Test that lambda_pm(1) = +/-1 gives A = B = 1/2 for N = 3"""
        coeffs = lemma_coefficients(1.0, 3)
        assert coeffs.A_z == pytest.approx(0.5)
        assert coeffs.B_z == pytest.approx(0.5)

    @pytest.mark.parametrize("N", [3, 4, 6])
    def test_boundary_conditions(self, N):
        """Test p_1 = z and r_(N-1) = 0, which the coefficients are built from"""
        z = 0.3 + 0.5j
        assert abs(lemma_gf(z, N, 1).p - z) < 1e-12
        assert abs(lemma_gf(z, N, N - 1).r) < 1e-12

    def test_array_matches_scalar(self):
        z = np.array([0.5, 0.2 + 0.7j])
        p, r = lemma_pr_array(z, 4, 2)
        scalar = lemma_gf(0.2 + 0.7j, 4, 2)
        assert p[1] == pytest.approx(scalar.p)
        assert r[1] == pytest.approx(scalar.r)

    def test_k_out_of_range(self):
        with pytest.raises(InvalidConfiguration):
            lemma_gf(0.5, 3, 3)

    def test_recursion_residual_is_reported(self):
        """Test that the residual is measured, not assumed, and stays finite"""
        report = recursion_residual(GFMethod.LEMMA, [0.5, 0.3 + 0.5j], 4)
        assert report.bc_p1_residual < 1e-12
        assert report.bc_rN1_residual < 1e-12
        assert math.isfinite(report.max_residual)


class TestKonnoForm:
    """Test cases for the printed C_z, E_z formulas"""

    def test_braces_vanish_at_n3(self):
        coeffs = konno_coefficients(0.5, 3)
        assert coeffs.braces_vanish
        assert coeffs.C_z == 0
        assert abs(coeffs.braces) < 1e-12

    def test_r_identically_zero_at_n3(self):
        for z in (0.5, 0.2 + 0.3j, 1j):
            assert konno_gf(z, 3, 1).r == 0

    def test_n3_p2_value(self):
        """Test p_2 = sqrt(2)(z^2 - 1) at z = 1/2"""
        value = konno_gf(0.5, 3, 2)
        assert value.p.real == pytest.approx(-1.06066017, abs=1e-7)
        assert abs(value.p.imag) < 1e-12

    def test_n3_recursion_residual(self):
        """Test that the printed N = 3 values fail the p recursion"""
        report = recursion_residual(GFMethod.KONNO, 0.5, 3)
        assert report.max_p_residual == pytest.approx(1.2374369, abs=1e-6)
        assert report.max_residual > 1e-6

    def test_n4_coefficients(self):
        coeffs = konno_coefficients(0.5, 4)
        assert not coeffs.braces_vanish
        assert coeffs.C_z.real == pytest.approx(0.00970142, abs=1e-7)
        assert coeffs.E_z.real == pytest.approx(-0.24981169, abs=1e-7)
        assert coeffs.braces.real == pytest.approx(53.125, abs=1e-9)

    def test_needs_n3_or_more(self):
        with pytest.raises(InvalidConfiguration):
            konno_gf(0.5, 2, 1)

    def test_degenerate_z(self):
        with pytest.raises(DegeneratePoint):
            konno_coefficients(0.0, 4)

    def test_p1_is_z(self):
        assert konno_gf(0.4 - 0.1j, 5, 1).p == pytest.approx(0.4 - 0.1j)


SAMPLE_POINTS = [0.3 + 0.5j, 0.8 - 0.4j, -0.6 + 0.2j, 1.2 + 0.7j, -0.9 - 1.1j, 0.45j]


def close(actual, expected, tol=1e-12):
    return abs(actual - expected) <= tol * max(1.0, abs(expected))


class TestBranchSwap:
    """Test cases for the square-root branch not mattering to either closed form"""

    @pytest.mark.parametrize("N,k", [(3, 1), (4, 2), (5, 1), (5, 3)])
    def test_lemma_form(self, N, k):
        for z in SAMPLE_POINTS:
            principal, swapped = lemma_gf(z, N, k, branch=1), lemma_gf(z, N, k, branch=-1)
            assert close(swapped.p, principal.p)
            assert close(swapped.r, principal.r)

    @pytest.mark.parametrize("N,k", [(3, 1), (4, 2), (5, 1), (5, 3)])
    def test_konno_form(self, N, k):
        for z in SAMPLE_POINTS:
            principal, swapped = konno_gf(z, N, k, branch=1), konno_gf(z, N, k, branch=-1)
            assert close(swapped.p, principal.p)
            assert close(swapped.r, principal.r)


class TestRealCoefficients:
    """Test cases for value(conj z) = conj(value(z))"""

    @pytest.mark.parametrize("method", [GFMethod.LEMMA, GFMethod.KONNO, GFMethod.SOLVE])
    @pytest.mark.parametrize("N,k", [(3, 1), (4, 2), (6, 4)])
    def test_conjugation(self, method, N, k):
        for z in SAMPLE_POINTS:
            value = evaluate_gf(method, z, N, k)
            mirrored = evaluate_gf(method, z.conjugate(), N, k)
            assert close(mirrored.p, value.p.conjugate())
            assert close(mirrored.r, value.r.conjugate())
