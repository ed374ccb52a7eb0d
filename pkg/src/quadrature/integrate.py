"""Apply rules to integrands and to pre-sampled data."""

import math
from fractions import Fraction
from typing import Callable, Dict, Iterable, Optional, Tuple, Union

import numpy as np

from ..arith.rational import RationalLike
from ..models.convergence import PairedEstimate
from ..models.rule_spec import RuleSpec
from ..models.samples import SampleSet
from ..models.weight_vector import PhysicalRule, WeightVector
from ..rules.builder import build_weights, map_to_interval
from ..utils.exceptions import EvaluationError, NonFiniteIntegrandError, SampleRangeError
from ..utils.logging_config import get_logger

logger = get_logger(__name__)

Number = Union[float, Fraction]
Function = Callable[[Number], Number]


def _ordinate(f: Function, index: int, node: Number, exact: bool) -> Number:
    """Evaluate f at one node, rejecting values the rule cannot use."""
    try:
        value = f(node)
    except (ArithmeticError, ValueError) as exc:
        logger.warning("integrand failed at node", index=index, abscissa=float(node), error=str(exc))
        raise NonFiniteIntegrandError(index=index, abscissa=float(node), value=str(exc)) from exc
    return _checked(value, index, node, exact)


def _checked(value: Number, index: int, node: Number, exact: bool) -> Number:
    if exact:
        if isinstance(value, int) and not isinstance(value, bool):
            return Fraction(value)
        if not isinstance(value, Fraction):
            raise EvaluationError(value=value, index=index)
        return value

    value = float(value)
    if not math.isfinite(value):
        logger.warning("non-finite ordinate", index=index, abscissa=float(node), value=value)
        raise NonFiniteIntegrandError(index=index, abscissa=float(node), value=value)
    return value


def sample_rule(f: Function, rules: Iterable[PhysicalRule], exact: bool = False) -> Dict[int, Number]:
    """One ordinate per node index over the union of the rules' nodes.

    Rules on the same terminals and n share node positions, so an index
    names the same abscissa in each of them.
    """
    ordinates: Dict[int, Number] = {}
    for rule in rules:
        nodes = rule.exact_nodes if exact else rule.nodes
        for index, node in zip(rule.indices, nodes):
            if index not in ordinates:
                ordinates[index] = _ordinate(f, index, node, exact)
    return ordinates


def apply_weights(
    weights: WeightVector,
    h: Number,
    ordinates: Dict[int, Number],
    exact: bool = False
) -> Number:
    """h times the weighted sum of the ordinates.

    Floating sums use numpy products accumulated with math.fsum; exact
    sums stay in Fractions.
    """
    if exact:
        total = sum((w * ordinates[i] for i, w in zip(weights.indices, weights.weights)), Fraction(0))
        return h * total

    values = np.array([ordinates[i] for i in weights.indices], dtype=float)
    return float(h) * math.fsum(weights.as_floats() * values)


def integrate_function(
    f: Function,
    a: Union[RationalLike, float],
    b: Union[RationalLike, float],
    spec: RuleSpec,
    exact: bool = False
) -> Number:
    """Integrate f over [a, b] with the rule ``spec``.

    Args:
        f: Integrand; must accept Fractions and return Fractions when exact
        a: Lower terminal
        b: Upper terminal
        spec: Rule parameterization
        exact: Evaluate in rational arithmetic

    Returns:
        Float estimate, or a Fraction when exact

    Raises:
        InvalidIntervalError: a >= b
        NonFiniteIntegrandError: f is not finite at some node
        EvaluationError: exact mode and f returned a non-rational value
    """
    rule = map_to_interval(spec, a, b)
    ordinates = sample_rule(f, [rule], exact)
    h = rule.exact_h if exact else rule.h
    return apply_weights(rule.source, h, ordinates, exact)


def integrate_samples(
    samples: SampleSet,
    m_left: int,
    m_right: Optional[int] = None,
    exact: Optional[bool] = None
) -> Number:
    """Integrate pre-sampled data.

    Args:
        samples: Ordinates, spacing and terminal offsets
        m_left: Correction depth at the lower end
        m_right: Correction depth at the upper end (defaults to m_left)
        exact: Rational evaluation; defaults to whether all samples are Fractions

    Returns:
        h times the weighted sum of the samples

    Raises:
        SampleRangeError: Corrections need samples outside 0..len-1
    """
    weights = build_weights(samples.spec(m_left, m_right))
    n = samples.n

    missing = [
        i for i, w in zip(weights.indices, weights.weights)
        if (i < 0 or i > n) and w != 0
    ]
    if missing:
        logger.warning("corrections need missing samples", missing=missing, n=n)
        raise SampleRangeError(missing=missing)

    if exact is None:
        exact = samples.is_exact

    ordinates: Dict[int, Number] = {}
    for i in weights.indices:
        if 0 <= i <= n:
            value = samples.values[i]
            ordinates[i] = _checked(value, i, (samples.alpha + i) * samples.h, exact)
        else:
            ordinates[i] = Fraction(0) if exact else 0.0

    h = samples.h if exact else float(samples.h)
    return apply_weights(weights, h, ordinates, exact)


def paired_estimate(
    f: Function,
    a: Union[RationalLike, float],
    b: Union[RationalLike, float],
    alpha: RationalLike,
    beta: RationalLike,
    m: int,
    n: int,
    exact: bool = False
) -> PairedEstimate:
    """Estimates with depths m and m+1 from the same ordinates.

    Returns:
        PairedEstimate(estimate, refined, difference) with difference the
        absolute gap between the two
    """
    rules: Tuple[PhysicalRule, ...] = tuple(
        map_to_interval(RuleSpec(alpha=alpha, beta=beta, m_left=depth, n=n), a, b)
        for depth in (m, m + 1)
    )
    ordinates = sample_rule(f, rules, exact)

    coarse, fine = (
        apply_weights(rule.source, rule.exact_h if exact else rule.h, ordinates, exact)
        for rule in rules
    )
    return PairedEstimate(estimate=coarse, refined=fine, difference=abs(coarse - fine))
