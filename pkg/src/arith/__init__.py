"""Exact rational arithmetic."""

from .rational import (
    Rational,
    binomial_general,
    format_decimal,
    format_rational,
    parse_rational,
    rational,
    to_rational,
)

__all__ = [
    "Rational",
    "binomial_general",
    "format_decimal",
    "format_rational",
    "parse_rational",
    "rational",
    "to_rational",
]
