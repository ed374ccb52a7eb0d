"""Builtin test integrands with known integrals."""

import math
from abc import ABC, abstractmethod
from fractions import Fraction
from typing import List, Optional, Sequence, Union

from ..arith.rational import RationalLike, format_rational, to_rational
from ..utils.exceptions import IntegrandError, RationalError

Number = Union[float, Fraction]


class Integrand(ABC):
    """A named function of one variable with a known integral."""

    name: str = "integrand"

    @abstractmethod
    def __call__(self, t: Number) -> Number:
        ...

    @abstractmethod
    def integral(self, a: Number, b: Number) -> Number:
        """Integral over [a, b]."""

    @property
    def is_polynomial(self) -> bool:
        return False

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.name!r})"


class Polynomial(Integrand):
    """Polynomial with rational coefficients c0 + c1 t + c2 t^2 + ...

    Called with a Fraction it returns a Fraction, so rules can be applied
    in exact arithmetic; called with a float it returns a float.
    """

    def __init__(self, coefficients: Sequence[RationalLike], name: Optional[str] = None):
        if not coefficients:
            raise IntegrandError(text="poly:")
        self.coefficients: List[Fraction] = [to_rational(c) for c in coefficients]
        self._float_coefficients = [float(c) for c in self.coefficients]
        self.name = name or "poly:" + ",".join(format_rational(c) for c in self.coefficients)

    @property
    def degree(self) -> int:
        nonzero = [k for k, c in enumerate(self.coefficients) if c != 0]
        return nonzero[-1] if nonzero else 0

    @property
    def is_polynomial(self) -> bool:
        return True

    def __call__(self, t: Number) -> Number:
        coefficients = self.coefficients if isinstance(t, (Fraction, int)) else self._float_coefficients
        value = coefficients[-1]
        for c in reversed(coefficients[:-1]):
            value = value * t + c
        return value

    def antiderivative(self) -> 'Polynomial':
        return Polynomial(
            [Fraction(0)] + [c / (k + 1) for k, c in enumerate(self.coefficients)],
            name=f"int({self.name})"
        )

    def integral(self, a: Number, b: Number) -> Number:
        """Exact Fraction when both limits are rational."""
        primitive = self.antiderivative()
        if isinstance(a, float) or isinstance(b, float):
            return primitive(float(b)) - primitive(float(a))
        return primitive(to_rational(b)) - primitive(to_rational(a))


class _Elementary(Integrand):
    """Transcendental integrand evaluated in floating point."""

    def __init__(self, name: str, function, primitive):
        self.name = name
        self._function = function
        self._primitive = primitive

    def __call__(self, t: Number) -> float:
        return self._function(float(t))

    def integral(self, a: Number, b: Number) -> float:
        return self._primitive(float(b)) - self._primitive(float(a))


def exp_integrand() -> Integrand:
    return _Elementary("exp", math.exp, math.exp)


def sin_integrand() -> Integrand:
    return _Elementary("sin", math.sin, lambda t: -math.cos(t))


def cos_integrand() -> Integrand:
    return _Elementary("cos", math.cos, math.sin)


def monomial(k: int) -> Polynomial:
    """(k+1) t^k, whose integral over [0, 1] is 1."""
    if k < 0:
        raise IntegrandError(text=f"monomial:{k}")
    return Polynomial([0] * k + [k + 1], name=f"monomial:{k}")


BUILTIN_NAMES = ("poly:c0,c1,...", "monomial:k", "exp", "sin", "cos")

_ELEMENTARY = {
    "exp": exp_integrand,
    "sin": sin_integrand,
    "cos": cos_integrand,
}


def parse_integrand(text: str) -> Integrand:
    """Resolve a builtin integrand name.

    Args:
        text: "poly:c0,c1,...", "monomial:k", "exp", "sin" or "cos"

    Returns:
        Integrand instance

    Raises:
        IntegrandError: Unknown name or malformed arguments
    """
    key, _, args = text.strip().partition(":")
    key = key.lower()

    if key in _ELEMENTARY and not args:
        return _ELEMENTARY[key]()

    if key == "poly" and args:
        try:
            return Polynomial([to_rational(part.strip()) for part in args.split(",")])
        except RationalError:
            raise IntegrandError(text=text) from None

    if key == "monomial" and args:
        try:
            return monomial(int(args))
        except ValueError:
            raise IntegrandError(text=text) from None

    raise IntegrandError(text=text)
