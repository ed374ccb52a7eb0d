"""Empirical convergence-order studies."""

import math
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from typing import List, Optional, Union

from .integrate import Function, integrate_function
from ..arith.rational import RationalLike, to_rational
from ..models.convergence import ConvergenceLevel, ConvergenceReport
from ..models.rule_spec import RuleSpec
from ..utils.exceptions import RuleParameterError
from ..utils.logging_config import get_logger

logger = get_logger(__name__)

Number = Union[float, Fraction]


def _level(
    f: Function,
    exact_value: Number,
    a: Union[RationalLike, float],
    b: Union[RationalLike, float],
    spec: RuleSpec,
    exact_arithmetic: bool
) -> ConvergenceLevel:
    estimate = integrate_function(f, a, b, spec, exact=exact_arithmetic)
    error = abs(estimate - exact_value)
    h = (to_rational(b) - to_rational(a)) / spec.length
    logger.debug("convergence level", n=spec.n, h=float(h), error=float(error))
    return ConvergenceLevel(n=spec.n, h=float(h), estimate=float(estimate), error=float(error))


def estimate_order(
    f: Function,
    exact: Number,
    a: Union[RationalLike, float],
    b: Union[RationalLike, float],
    alpha: RationalLike,
    beta: RationalLike,
    m: int,
    n0: int,
    doublings: int,
    m_right: Optional[int] = None,
    exact_arithmetic: bool = False,
    zero_tolerance: float = 0.0,
    max_workers: int = 1
) -> ConvergenceReport:
    """Errors of one rule family under repeated doubling of the node count.

    Level k uses (n0+1) 2^k nodes on the fixed interval [a, b], so h only
    halves exactly when alpha + beta = 1. The estimated order is the sum
    of log error ratios over the sum of log step ratios.

    Args:
        f: Integrand
        exact: True value of the integral
        a: Lower terminal
        b: Upper terminal
        alpha: Lower terminal offset
        beta: Upper terminal offset
        m: Correction depth (both ends unless m_right is given)
        n0: Index of the last node at the coarsest level
        doublings: Number of refinements after the first level
        m_right: Correction depth at the upper end
        exact_arithmetic: Evaluate in rational arithmetic (polynomials)
        zero_tolerance: Errors at or below this count as zero
        max_workers: Threads used to evaluate the levels

    Returns:
        ConvergenceReport; exact=True and no order when an error vanishes
    """
    if doublings < 1:
        raise RuleParameterError(rule="estimate_order", detail=f"doublings must be at least 1, got {doublings}")

    exact_value = to_rational(exact) if exact_arithmetic else float(exact)
    specs = [
        RuleSpec(alpha=alpha, beta=beta, m_left=m, m_right=m_right, n=(n0 + 1) * 2 ** k - 1)
        for k in range(doublings + 1)
    ]

    def run(spec: RuleSpec) -> ConvergenceLevel:
        return _level(f, exact_value, a, b, spec, exact_arithmetic)

    if max_workers > 1:
        with ThreadPoolExecutor(max_workers=max_workers) as pool:
            levels: List[ConvergenceLevel] = list(pool.map(run, specs))
    else:
        levels = [run(spec) for spec in specs]

    errors = [level.error for level in levels]
    vanishing = any(error <= zero_tolerance for error in errors)

    ratios: List[Optional[float]] = []
    for coarse, fine in zip(errors, errors[1:]):
        if coarse <= zero_tolerance or fine <= zero_tolerance:
            ratios.append(None)
        else:
            ratios.append(coarse / fine)

    order: Optional[float] = None
    if not vanishing:
        log_errors = math.fsum(math.log(ratio) for ratio in ratios)
        log_steps = math.fsum(
            math.log(coarse.h / fine.h) for coarse, fine in zip(levels, levels[1:])
        )
        order = log_errors / log_steps

    logger.info(
        "convergence study finished",
        m=m, levels=len(levels), order=order, exact=vanishing
    )
    return ConvergenceReport(
        alpha=alpha,
        beta=beta,
        m=m,
        levels=tuple(levels),
        ratios=tuple(ratios),
        estimated_order=order,
        exact=vanishing,
    )
