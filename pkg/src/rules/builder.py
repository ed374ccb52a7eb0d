"""Assemble weight vectors from end corrections.

A rule over nodes 0..n starts from unit weights. The lower-end corrections
c_i are added at index i and the upper-end corrections d_i at index n - i.
Overlapping corrections add; corrections that reach past the unit block
land on nodes outside 0..n, which then carry correction weight only.
"""

import math
from fractions import Fraction
from typing import Dict, List, Optional, Union

from ..arith.rational import RationalLike, to_rational
from ..corrections.cache import correction_set
from ..models.enums import CompositeBase
from ..models.rule_spec import RuleSpec
from ..models.weight_vector import CompositeCorrections, PhysicalRule, WeightVector
from ..utils.error_messages import error_messages
from ..utils.exceptions import InvalidIntervalError, NoCompositeBaseError
from ..utils.logging_config import get_logger

logger = get_logger(__name__)

HALF = Fraction(1, 2)


def build_weights(spec: RuleSpec) -> WeightVector:
    """Exact weights of the rule described by ``spec``.

    Args:
        spec: Rule parameterization

    Returns:
        WeightVector over indices spec.lo..spec.hi
    """
    lo, hi, n = spec.lo, spec.hi, spec.n
    weights: List[Fraction] = [
        Fraction(1) if 0 <= index <= n else Fraction(0) for index in range(lo, hi + 1)
    ]

    for i, c in enumerate(correction_set(spec.alpha, spec.m_left).c):
        weights[i - lo] += c
    for i, d in enumerate(correction_set(spec.beta, spec.m_right).c):
        weights[n - i - lo] += d

    if lo < 0 or hi > n:
        logger.info(
            "corrections overshoot the base nodes",
            lo=lo, hi=hi, n=n, m_left=spec.m_left, m_right=spec.m_right
        )
    if spec.overlapping:
        logger.debug(error_messages.get_warning_message("overlapping_corrections"), n=n)

    return WeightVector(lo=lo, weights=tuple(weights), spec=spec)


def map_to_interval(
    spec: Union[RuleSpec, WeightVector],
    a: Union[RationalLike, float],
    b: Union[RationalLike, float]
) -> PhysicalRule:
    """Place a rule on [a, b].

    The step is h = (b - a) / (n + alpha + beta) and node i sits at
    a + (alpha + i) h, so nodes may fall outside [a, b].

    Args:
        spec: Rule parameterization, or weights already built for it
        a: Lower terminal
        b: Upper terminal

    Returns:
        PhysicalRule with float and exact nodes and h-scaled weights

    Raises:
        InvalidIntervalError: If a >= b
    """
    weights = spec if isinstance(spec, WeightVector) else build_weights(spec)
    spec = weights.spec

    exact_a, exact_b = to_rational(a), to_rational(b)
    if exact_a >= exact_b:
        raise InvalidIntervalError(a=a, b=b)

    h = (exact_b - exact_a) / spec.length
    exact_nodes = tuple(exact_a + (spec.alpha + i) * h for i in weights.indices)
    exact_weights = tuple(w * h for w in weights.weights)

    rule = PhysicalRule(
        a=float(exact_a),
        b=float(exact_b),
        h=float(h),
        indices=tuple(weights.indices),
        nodes=tuple(float(x) for x in exact_nodes),
        weights=tuple(float(w) for w in exact_weights),
        exact_a=exact_a,
        exact_b=exact_b,
        exact_h=h,
        exact_nodes=exact_nodes,
        exact_weights=exact_weights,
        source=weights,
    )

    outside = rule.outside_nodes
    if outside:
        logger.info(error_messages.get_warning_message("nodes_outside_range"), indices=outside)

    return rule


def exact_moment(spec: RuleSpec, k: int) -> Fraction:
    """Integral of t^k over [-alpha, n + beta]."""
    upper = spec.n + spec.beta
    lower = -spec.alpha
    return (upper ** (k + 1) - lower ** (k + 1)) / (k + 1)


def monomial_moment(weights: WeightVector, k: int) -> Fraction:
    """Rule applied to t^k on the index scale: sum of w_i i^k."""
    return sum((w * Fraction(i) ** k for i, w in zip(weights.indices, weights.weights)), Fraction(0))


def exactness_degree(weights: WeightVector, limit: Optional[int] = None) -> int:
    """Largest K with exact moments for every k <= K.

    Args:
        weights: Weight vector to check
        limit: Highest degree tried; defaults to max(m_left, m_right) + 3

    Returns:
        K, or -1 when even the constant fails
    """
    spec = weights.spec
    if limit is None:
        limit = max(spec.m_left, spec.m_right) + 3

    degree = -1
    for k in range(limit + 1):
        if monomial_moment(weights, k) != exact_moment(spec, k):
            break
        degree = k
    return degree


def composite_base(spec: RuleSpec) -> CompositeBase:
    """Composite rule sharing the terminals of ``spec``.

    Raises:
        NoCompositeBaseError: alpha or beta is not a multiple of 1/2
    """
    kinds = set()
    for offset in (spec.alpha, spec.beta):
        if offset.denominator == 1:
            kinds.add(CompositeBase.TRAPEZOID)
        elif offset.denominator == 2:
            kinds.add(CompositeBase.MIDPOINT)
        else:
            raise NoCompositeBaseError(alpha=spec.alpha, beta=spec.beta)
    return kinds.pop() if len(kinds) == 1 else CompositeBase.MIXED


def composite_baseline(spec: RuleSpec) -> Dict[int, Fraction]:
    """Weights of the composite rule on the terminals of ``spec``.

    Node i owns the cell [i - 1/2, i + 1/2] clipped to [-alpha, n + beta].
    Integer offsets give the composite trapezoidal rule, half-odd offsets
    the composite midpoint rule.

    Returns:
        Mapping index -> weight for every index with a non-empty cell
    """
    composite_base(spec)

    lower, upper = -spec.alpha, spec.n + spec.beta
    baseline: Dict[int, Fraction] = {}
    for i in range(math.floor(lower) - 1, math.ceil(upper) + 2):
        cell = min(i + HALF, upper) - max(i - HALF, lower)
        if cell > 0:
            baseline[i] = cell
    return baseline


def composite_corrections(weights: WeightVector) -> CompositeCorrections:
    """Weights minus the composite baseline over the union of both ranges."""
    spec = weights.spec
    base = composite_base(spec)
    baseline = composite_baseline(spec)

    lo = min(weights.lo, min(baseline))
    hi = max(weights.hi, max(baseline))
    values = tuple(
        weights.weight_at(i) - baseline.get(i, Fraction(0)) for i in range(lo, hi + 1)
    )
    return CompositeCorrections(base=base, lo=lo, values=values)
