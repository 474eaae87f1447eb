"""
Unit tests for the exact conjectured recursion
"""

from fractions import Fraction

import pytest

from src.walkrecon.absorption import RationalProb, conjecture_limit_check, conjecture_sequence
from src.walkrecon.core.errors import InvalidConfiguration


class TestRationalProb:
    """Test cases for reduced probabilities"""

    def test_reduces(self):
        value = RationalProb(24, 34)
        assert (value.numerator, value.denominator) == (12, 17)
        assert str(value) == "12/17"

    def test_decimal(self):
        assert RationalProb(2, 3).decimal == pytest.approx(2 / 3)

    def test_range(self):
        with pytest.raises(InvalidConfiguration):
            RationalProb(3, 2)
        with pytest.raises(InvalidConfiguration):
            RationalProb(1, 0)

    def test_from_fraction(self):
        assert RationalProb.from_fraction(Fraction(7, 10)).value == Fraction(7, 10)


class TestConjectureSequence:
    """Test cases for P^(N+1) = (1 + 2P^N) / (2 + 2P^N)"""

    def test_first_terms(self):
        terms = [str(v) for v in conjecture_sequence(5)]
        assert terms == ["0/1", "1/2", "2/3", "7/10", "12/17"]

    def test_single_term(self):
        assert conjecture_sequence(1)[0].value == 0

    def test_rejects_bad_N(self):
        with pytest.raises(InvalidConfiguration):
            conjecture_sequence(0)
        with pytest.raises(InvalidConfiguration):
            conjecture_sequence(2.5)

    def test_limit_check(self, inverse_sqrt2):
        """Test monotone increase towards 1/sqrt 2 without crossing it"""
        check = conjecture_limit_check(60)
        assert check['increasing']
        assert check['bounded_by_inverse_sqrt2']
        assert check['first_violation'] is None
        assert 0 < conjecture_limit_check(10)['gap_to_limit'] < 1e-6
        assert check['last'].decimal == pytest.approx(inverse_sqrt2, abs=1e-12)
