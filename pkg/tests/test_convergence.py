"""Tests for convergence-order studies."""

import math
from fractions import Fraction as F

import pytest

from src.models.convergence import ConvergenceLevel, ConvergenceReport
from src.quadrature.convergence import estimate_order
from src.quadrature.integrands import exp_integrand, monomial
from src.utils.exceptions import RuleParameterError

HALF = F(1, 2)


@pytest.mark.convergence
class TestErrorRatios:
    """Error ratios under one doubling, computed in exact arithmetic."""

    def test_level_layout(self):
        """Test level k uses (n0+1) 2^k nodes."""
        report = estimate_order(monomial(6), 1, 0, 1, HALF, HALF, 2, 9, 2, exact_arithmetic=True)
        assert [level.nodes for level in report.levels] == [10, 20, 40]
        assert [level.n for level in report.levels] == [9, 19, 39]
        assert report.levels[0].h == pytest.approx(0.1)
        assert len(report.ratios) == 2


@pytest.mark.convergence
@pytest.mark.slow
class TestEstimatedOrder:
    """Estimated orders for a smooth integrand."""

    @pytest.mark.parametrize("m", [2, 3])
    def test_exp_order(self, m):
        """Test the order approaches m+2."""
        report = estimate_order(exp_integrand(), math.e - 1, 0, 1, HALF, HALF, m, 19, 3)
        assert not report.exact
        assert report.estimated_order == pytest.approx(m + 2, abs=0.5)
        assert report.predicted_order == m + 2

    def test_threads_give_same_levels(self):
        """Test levels do not depend on the worker count."""
        serial = estimate_order(exp_integrand(), math.e - 1, 0, 1, 0, 0, 2, 9, 2)
        threaded = estimate_order(exp_integrand(), math.e - 1, 0, 1, 0, 0, 2, 9, 2, max_workers=3)
        assert serial.levels == threaded.levels


@pytest.mark.convergence
class TestExactDetection:
    """Zero errors are reported instead of an order."""

    def test_exact_polynomial(self):
        """Test a polynomial within the exactness degree."""
        report = estimate_order(monomial(3), 1, 0, 1, HALF, HALF, 2, 9, 2, exact_arithmetic=True)
        assert report.exact
        assert report.estimated_order is None
        assert report.ratios == (None, None)
        assert report.level_orders == (None, None)

    def test_zero_tolerance(self):
        """Test errors below the tolerance count as zero."""
        report = estimate_order(exp_integrand(), math.e - 1, 0, 1, HALF, HALF, 4, 39, 1, zero_tolerance=1e-3)
        assert report.exact
        assert report.estimated_order is None

    def test_doublings_required(self):
        """Test at least one doubling is needed."""
        with pytest.raises(RuleParameterError):
            estimate_order(monomial(2), 1, 0, 1, 0, 0, 1, 9, 0)


@pytest.mark.unit
class TestConvergenceReport:
    """Test the report model."""

    def levels(self):
        return (
            ConvergenceLevel(n=9, h=0.1, estimate=1.01, error=0.01),
            ConvergenceLevel(n=19, h=0.05, estimate=1.000625, error=0.000625),
        )

    def test_level_orders(self):
        """Test per-pair orders from ratios and step lengths."""
        report = ConvergenceReport(
            alpha=HALF, beta=HALF, m=2, levels=self.levels(), ratios=(16.0,), estimated_order=4.0
        )
        assert report.level_orders[0] == pytest.approx(4.0)

    def test_ratio_count_checked(self):
        """Test the ratio count must match the level count."""
        with pytest.raises(RuleParameterError):
            ConvergenceReport(alpha=0, beta=0, m=2, levels=self.levels(), ratios=())

    def test_exact_reports_have_no_order(self):
        """Test an exact report cannot carry an order."""
        with pytest.raises(RuleParameterError):
            ConvergenceReport(
                alpha=0, beta=0, m=2, levels=self.levels(), ratios=(None,), estimated_order=4.0, exact=True
            )
