"""Shared field types for EquiQuad models."""

from fractions import Fraction
from typing import Annotated

from pydantic import BeforeValidator, PlainSerializer

from ..arith.rational import format_rational, to_rational
from ..utils.exceptions import RuleParameterError
from ..utils.error_messages import error_messages, ErrorCategory


# Accepts Fraction, int, "p/q" or decimal text; JSON dumps as "p/q"
RationalField = Annotated[
    Fraction,
    BeforeValidator(to_rational),
    PlainSerializer(format_rational, return_type=str, when_used='json'),
]


def require_non_negative(owner: str, field_name: str, value: int) -> int:
    """Reject negative counts with a RuleParameterError."""
    if value < 0:
        detail = error_messages.get_error_message(
            "negative", ErrorCategory.VALIDATION, {"field_name": field_name, "value": value}
        )
        raise RuleParameterError(rule=owner, detail=detail.rstrip('.'))
    return value
