"""Interpolatory weights by exact Vandermonde inversion.

Used as an independent check on build_weights: with as many nodes as
the exactness degree plus one, the weights of a rule are the unique
solution of its moment equations.
"""

from fractions import Fraction
from typing import List, Sequence

import sympy

from ..arith.rational import RationalLike, to_rational
from ..utils.exceptions import SingularSystemError


def _to_sympy(value: Fraction) -> sympy.Rational:
    return sympy.Rational(value.numerator, value.denominator)


def _to_fraction(value: sympy.Rational) -> Fraction:
    value = sympy.Rational(value)
    return Fraction(int(value.p), int(value.q))


def vandermonde_oracle(
    node_indices: Sequence[int],
    alpha: RationalLike,
    beta: RationalLike,
    n: int
) -> List[Fraction]:
    """Weights w_j at the given indices reproducing every moment k < count.

    Solves sum_j w_j i_j^k = ((n+beta)^(k+1) - (-alpha)^(k+1)) / (k+1)
    for k = 0..count-1 with sympy rationals.

    Raises:
        SingularSystemError: Repeated node indices
    """
    indices = list(node_indices)
    if not indices or len(set(indices)) != len(indices):
        raise SingularSystemError(indices=indices)

    alpha, beta = to_rational(alpha), to_rational(beta)
    upper, lower = _to_sympy(n + beta), _to_sympy(-alpha)
    count = len(indices)

    matrix = sympy.Matrix(count, count, lambda k, j: sympy.Integer(indices[j]) ** k)
    moments = sympy.Matrix(
        count, 1, lambda k, _: (upper ** (k + 1) - lower ** (k + 1)) / (k + 1)
    )

    solution = matrix.inv() * moments
    return [_to_fraction(value) for value in solution]
