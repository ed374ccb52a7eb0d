"""Triangular systems linking alpha to the end corrections.

The lower-triangular unit-diagonal system

    sum_{k=0}^{i} (-1)^(i-k) / (i-k+1) * b_k = (-1)^(i+1) / (i+2) - C(-alpha, i+1)

gives the difference coefficients b_k by forward substitution, one row
per i = 0..m. Because row i only involves b_0..b_i, raising m appends
entries and never changes earlier ones.

The ordinate corrections follow from the upper-triangular transform

    c_i = sum_{k=i}^{m} C(k, i) (-1)^(k-i) b_k

and c_i multiplies f at the i-th node counted inward from the end.
"""

from fractions import Fraction
from math import comb
from typing import List, Sequence

from ..arith.rational import RationalLike, binomial_general, to_rational
from ..utils.exceptions import RuleParameterError
from ..utils.logging_config import get_logger

logger = get_logger(__name__)


def _sign(power: int) -> int:
    return -1 if power % 2 else 1


def solve_b(alpha: RationalLike, m: int) -> List[Fraction]:
    """Difference coefficients b_0..b_m for terminal offset alpha.

    Args:
        alpha: Offset of the terminal from the end node, measured inward
        m: Highest polynomial degree the corrections make exact

    Returns:
        List of m+1 Fractions
    """
    if m < 0:
        raise RuleParameterError(rule="solve_b", detail=f"m must be non-negative, got {m}")

    alpha = to_rational(alpha)
    b: List[Fraction] = []
    for i in range(m + 1):
        rhs = Fraction(_sign(i + 1), i + 2) - binomial_general(-alpha, i + 1)
        for k in range(i):
            rhs -= Fraction(_sign(i - k), i - k + 1) * b[k]
        # diagonal entry is 1
        b.append(rhs)

    logger.debug("solved difference coefficients", alpha=str(alpha), m=m)
    return b


def b_to_c(b: Sequence[RationalLike]) -> List[Fraction]:
    """Ordinate corrections from difference coefficients."""
    if not b:
        raise RuleParameterError(rule="b_to_c", detail="need at least one coefficient")

    b = [to_rational(value) for value in b]
    m = len(b) - 1
    return [
        sum((comb(k, i) * _sign(k - i) * b[k] for k in range(i, m + 1)), Fraction(0))
        for i in range(m + 1)
    ]


def c_to_b(c: Sequence[RationalLike]) -> List[Fraction]:
    """Invert b_to_c by back-substitution from b_m down to b_0."""
    if not c:
        raise RuleParameterError(rule="c_to_b", detail="need at least one correction")

    c = [to_rational(value) for value in c]
    m = len(c) - 1
    b: List[Fraction] = [Fraction(0)] * (m + 1)
    for i in range(m, -1, -1):
        value = c[i]
        for k in range(i + 1, m + 1):
            value -= comb(k, i) * _sign(k - i) * b[k]
        b[i] = value
    return b
