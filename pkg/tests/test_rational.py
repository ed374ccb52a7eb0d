"""Tests for exact rational arithmetic."""

from fractions import Fraction

import pytest

from src.arith.rational import (
    binomial_general,
    format_decimal,
    format_rational,
    parse_rational,
    rational,
    to_rational,
)
from src.utils.exceptions import (
    QuadratureError,
    RationalError,
    RationalParseError,
    ZeroDenominatorError,
)
from tests.conftest import random_rational


@pytest.mark.unit
class TestRationalConstruction:
    """Test construction and normalization."""

    def test_normalizes_to_lowest_terms(self):
        """Test 2/4 becomes 1/2."""
        value = rational(2, 4)
        assert (value.numerator, value.denominator) == (1, 2)

    def test_sign_carried_by_numerator(self):
        """Test (-5, -8) becomes 5/8 and (3, -4) becomes -3/4."""
        assert rational(-5, -8) == Fraction(5, 8)
        value = rational(3, -4)
        assert (value.numerator, value.denominator) == (-3, 4)

    def test_zero_is_zero_over_one(self):
        """Test zero normalizes to 0/1."""
        value = rational(0, 7)
        assert (value.numerator, value.denominator) == (0, 1)

    def test_zero_denominator(self):
        """Test zero denominator raises a construction error."""
        with pytest.raises(ZeroDenominatorError):
            rational(1, 0)

    def test_large_integers_are_exact(self):
        """Test arbitrary-precision parts survive arithmetic."""
        big = rational(10 ** 40 + 1, 3)
        assert big * rational(3, 10 ** 40 + 1) == 1

    def test_reciprocal_product_is_one(self, rng):
        """Test (a/b)(b/a) = 1 for random nonzero values."""
        for _ in range(50):
            value = random_rational(rng)
            if value == 0:
                continue
            assert value * (1 / value) == 1


@pytest.mark.unit
class TestParseRational:
    """Test parsing of rational text."""

    @pytest.mark.parametrize("text,expected", [
        ("1/2", Fraction(1, 2)),
        ("-0.5", Fraction(-1, 2)),
        ("3", Fraction(3)),
        (" -3 / 4 ", Fraction(-3, 4)),
        ("0.1", Fraction(1, 10)),
        ("1e-3", Fraction(1, 1000)),
        (".25", Fraction(1, 4)),
    ])
    def test_valid_text(self, text, expected):
        """Test integers, fractions and decimals parse exactly."""
        assert parse_rational(text) == expected

    @pytest.mark.parametrize("text", ["x", "", "1/2/3", "nan", "inf", "1/", "0x10"])
    def test_malformed_text(self, text):
        """Test malformed text raises a parse error."""
        with pytest.raises(RationalParseError):
            parse_rational(text)

    def test_zero_denominator_text(self):
        """Test "1/0" raises the zero-denominator error."""
        with pytest.raises(ZeroDenominatorError):
            parse_rational("1/0")

    def test_errors_share_base_class(self):
        """Test parse failures are library errors and not ValueErrors."""
        with pytest.raises(QuadratureError) as exc_info:
            parse_rational("abc")
        assert not isinstance(exc_info.value, ValueError)
        assert "abc" in str(exc_info.value)


@pytest.mark.unit
class TestToRational:
    """Test coercion of model and CLI values."""

    def test_float_uses_shortest_decimal(self):
        """Test 0.1 becomes 1/10, not the binary double."""
        assert to_rational(0.1) == Fraction(1, 10)

    def test_passes_fractions_and_ints(self):
        """Test Fractions and ints coerce unchanged."""
        assert to_rational(Fraction(2, 3)) == Fraction(2, 3)
        assert to_rational(-4) == Fraction(-4)

    @pytest.mark.parametrize("value", [float("nan"), float("inf"), True, None, [1]])
    def test_rejects_unsupported(self, value):
        """Test non-finite floats, bools and other objects are rejected."""
        with pytest.raises(RationalError):
            to_rational(value)


@pytest.mark.unit
class TestBinomialGeneral:
    """Test the generalized binomial coefficient."""

    def test_empty_product(self):
        """Test C(a, 0) = 1."""
        assert binomial_general(Fraction(7, 3), 0) == 1

    def test_zero_kills_higher_terms(self):
        """Test C(0, 2) = 0."""
        assert binomial_general(0, 2) == 0

    def test_negative_half(self):
        """Test C(-1/2, 2) = 3/8."""
        assert binomial_general(Fraction(-1, 2), 2) == Fraction(3, 8)

    def test_integer_below_index_vanishes(self):
        """Test C(a, j) = 0 for integers 0 <= a < j."""
        for a in range(5):
            for j in range(a + 1, 8):
                assert binomial_general(a, j) == 0

    def test_pascal_identity(self, rng):
        """Test C(a, j) = C(a-1, j) + C(a-1, j-1)."""
        for _ in range(40):
            a = random_rational(rng)
            j = rng.randint(1, 7)
            assert binomial_general(a, j) == binomial_general(a - 1, j) + binomial_general(a - 1, j - 1)

    def test_negative_index_rejected(self):
        """Test j < 0 raises."""
        with pytest.raises(RationalError):
            binomial_general(1, -1)


@pytest.mark.unit
class TestFormatting:
    """Test rendering of rationals."""

    def test_format_rational(self):
        """Test "p/q" and plain integers."""
        assert format_rational(Fraction(-5, 8)) == "-5/8"
        assert format_rational(Fraction(3)) == "3"
        assert format_rational(Fraction(0)) == "0"

    def test_format_decimal_rounds_exactly(self):
        """Test decimals carry the requested significant digits."""
        assert format_decimal(Fraction(1, 3), 5) == "0.33333"
        assert format_decimal(Fraction(1, 2)) == "0.5"
        assert format_decimal(Fraction(0)) == "0"

    def test_format_decimal_float(self):
        """Test floats use the general format."""
        assert format_decimal(0.25) == "0.25"
        assert format_decimal(1.0 / 3.0, 4) == "0.3333"
