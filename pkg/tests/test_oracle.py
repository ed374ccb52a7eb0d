"""Cross-checks of build_weights against direct moment inversion."""

from fractions import Fraction as F

import pytest

from src.models.rule_spec import RuleSpec
from src.quadrature.oracle import vandermonde_oracle
from src.rules.builder import build_weights
from src.rules.catalog import adams_bashforth, adams_moulton, newton_cotes_closed, newton_cotes_open
from src.utils.exceptions import SingularSystemError


def oracle_for(rule):
    spec = rule.spec
    return vandermonde_oracle(list(rule.indices), spec.alpha, spec.beta, spec.n)


@pytest.mark.exactness
class TestVandermondeOracle:
    """Rules with as many nodes as their degree plus one are interpolatory."""

    @pytest.mark.parametrize("points", [2, 3, 4, 5, 6, 8])
    def test_closed_newton_cotes(self, points):
        """Test closed rules, including the six-point one."""
        rule = newton_cotes_closed(points)
        assert oracle_for(rule) == list(rule.weights)

    def test_six_point_closed_rule(self):
        """Test the six-point closed weights."""
        expected = [F(95, 288), F(375, 288), F(250, 288), F(250, 288), F(375, 288), F(95, 288)]
        assert vandermonde_oracle(range(6), 0, 0, 5) == expected

    @pytest.mark.parametrize("points", [1, 2, 3, 4, 5])
    def test_open_newton_cotes(self, points):
        """Test open rules."""
        rule = newton_cotes_open(points)
        assert oracle_for(rule) == list(rule.weights)

    def test_open_rule_from_wider_corrections(self):
        """Test alpha = 1, m = 2 on four nodes is the four-point open rule."""
        rule = build_weights(RuleSpec(alpha=1, beta=1, m_left=2, n=3))
        assert list(rule.weights) == list(newton_cotes_open(4).weights)

    @pytest.mark.parametrize("steps", [1, 2, 3, 4, 5])
    def test_adams(self, steps):
        """Test Adams-Bashforth and Adams-Moulton rules."""
        bashforth = adams_bashforth(steps)
        assert oracle_for(bashforth) == list(bashforth.weights)
        if steps >= 2:
            moulton = adams_moulton(steps)
            assert oracle_for(moulton) == list(moulton.weights)

    def test_two_point_open_extended(self):
        """Test the overshooting alpha = 0, m = 2 rule on two base nodes."""
        rule = build_weights(RuleSpec(alpha=0, beta=0, m_left=2, n=1))
        expected = [F(-1, 24), F(13, 24), F(13, 24), F(-1, 24)]
        assert list(rule.weights) == expected
        assert vandermonde_oracle(range(-1, 3), 0, 0, 1) == expected

    def test_midpoint_type_on_four_nodes(self):
        """Test alpha = beta = 1/2, m = 3 on four nodes."""
        rule = build_weights(RuleSpec(alpha=F(1, 2), beta=F(1, 2), m_left=3, n=3))
        assert oracle_for(rule) == list(rule.weights)

    def test_repeated_indices(self):
        """Test duplicate nodes make the system singular."""
        with pytest.raises(SingularSystemError):
            vandermonde_oracle([0, 1, 1], 0, 0, 2)

    def test_no_indices(self):
        """Test an empty node list is rejected."""
        with pytest.raises(SingularSystemError):
            vandermonde_oracle([], 0, 0, 2)

    def test_returns_fractions(self):
        """Test results are Fractions, not sympy numbers."""
        result = vandermonde_oracle([0, 1, 2], F(1, 2), F(1, 2), 2)
        assert all(type(value) is F for value in result)
        assert sum(result) == 3
