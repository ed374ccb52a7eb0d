"""Exact rational arithmetic helpers.

Every coefficient in EquiQuad is a ``fractions.Fraction``: numerator and
denominator are Python integers (arbitrary precision), the denominator
is positive and the pair is kept in lowest terms after every operation,
so equality is structural and 0 is always 0/1.
"""

import math
import re
from decimal import Decimal, localcontext
from fractions import Fraction
from numbers import Rational as _RationalABC
from typing import Any, Union

from ..utils.exceptions import RationalError, RationalParseError, ZeroDenominatorError


Rational = Fraction

RationalLike = Union[Fraction, int, str]

_INTEGER = r'[+-]?\d+'
_DECIMAL = r'[+-]?(?:\d+\.\d*|\.\d+|\d+)(?:[eE][+-]?\d+)?'
_RATIONAL_PATTERN = re.compile(
    rf'^\s*(?:(?P<num>{_INTEGER})\s*/\s*(?P<den>{_INTEGER})|(?P<dec>{_DECIMAL}))\s*$'
)


def rational(num: int, den: int = 1) -> Fraction:
    """Build a normalized rational num/den.

    Args:
        num: Numerator
        den: Denominator, must be non-zero

    Returns:
        Fraction in lowest terms with the sign on the numerator

    Raises:
        ZeroDenominatorError: If den is zero
    """
    if den == 0:
        raise ZeroDenominatorError(text=f"{num}/{den}")
    return Fraction(num, den)


def parse_rational(text: str) -> Fraction:
    """Parse an integer, a fraction "p/q" or a finite decimal exactly.

    Decimals never pass through binary floating point, so "0.1" is 1/10.

    Raises:
        RationalParseError: Malformed or non-finite text
        ZeroDenominatorError: "p/0"
    """
    if not isinstance(text, str):
        raise RationalParseError(text=repr(text))

    match = _RATIONAL_PATTERN.match(text)
    if match is None:
        raise RationalParseError(text=text)

    if match.group('num') is not None:
        return rational(int(match.group('num')), int(match.group('den')))
    return Fraction(match.group('dec'))


def to_rational(value: Any) -> Fraction:
    """Coerce a model or CLI value to a Fraction.

    Floats go through their shortest decimal representation, so 0.1 is
    read as 1/10 rather than the nearest binary double.
    """
    if isinstance(value, bool):
        raise RationalError(value=value)
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, _RationalABC):
        return Fraction(value.numerator, value.denominator)
    if isinstance(value, str):
        return parse_rational(value)
    if isinstance(value, float):
        if not math.isfinite(value):
            raise RationalError(value=value)
        return Fraction(repr(value))
    raise RationalError(value=value)


def binomial_general(a: RationalLike, j: int) -> Fraction:
    """Generalized binomial coefficient C(a, j) for rational a.

    Built by the recursion C(a, 0) = 1, C(a, j) = C(a, j-1) (a-j+1)/j.
    """
    if j < 0:
        raise RationalError(f"binomial index must be non-negative, got {j}")

    a = to_rational(a)
    value = Fraction(1)
    for r in range(1, j + 1):
        value = value * (a - r + 1) / r
    return value


def format_rational(x: Fraction) -> str:
    """Render as "p/q", or "p" when the denominator is 1."""
    x = to_rational(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def format_decimal(x: Union[Fraction, int, float], digits: int = 17) -> str:
    """Render a value with ``digits`` significant digits.

    Fractions are rounded exactly through a decimal context; floats use
    the general format.
    """
    if isinstance(x, float):
        return f"{x:.{digits}g}"

    x = to_rational(x)
    with localcontext() as ctx:
        ctx.prec = digits
        value = Decimal(x.numerator) / Decimal(x.denominator)
    text = f"{value:g}" if value != 0 else "0"
    return text
