"""Exception types raised by EquiQuad.

None of these derive from ValueError, so a pydantic validator that raises
one lets it propagate unchanged instead of folding it into a
ValidationError.
"""

from typing import Any, Optional

from .error_messages import ErrorCategory, error_messages


class QuadratureError(Exception):
    """Base class for every error raised by the library."""

    code = "internal_error"
    category = ErrorCategory.SYSTEM

    def __init__(self, message: Optional[str] = None, **context: Any):
        self.context = context
        super().__init__(
            error_messages.get_error_message(self.code, self.category, context, message)
        )


class RationalError(QuadratureError):
    """Base class for rational construction and parsing failures."""

    code = "unsupported_rational"
    category = ErrorCategory.ARITHMETIC


class ZeroDenominatorError(RationalError):
    code = "zero_denominator"


class RationalParseError(RationalError):
    code = "invalid_rational"


class RuleSpecError(QuadratureError):
    """Base class for invalid rule parameterizations."""

    code = "invalid_rule_parameter"
    category = ErrorCategory.RULE


class EmptyRangeError(RuleSpecError):
    """n + alpha + beta is not positive."""

    code = "empty_range"


class RuleParameterError(RuleSpecError):
    code = "invalid_rule_parameter"


class NoCompositeBaseError(RuleParameterError):
    """Offsets are not multiples of 1/2."""

    code = "no_composite_base"


class UnknownRuleError(RuleSpecError):
    code = "unknown_rule"


class InvalidIntervalError(RuleSpecError):
    code = "inverted_limits"
    category = ErrorCategory.VALIDATION


class EvaluationError(QuadratureError):
    """Base class for failures while applying a rule."""

    code = "inexact_value"
    category = ErrorCategory.EVALUATION


class NonFiniteIntegrandError(EvaluationError):
    code = "non_finite"


class SampleRangeError(EvaluationError):
    """Corrections reach past the available samples."""

    code = "missing_samples"

    @property
    def missing(self) -> list:
        return list(self.context.get("missing", []))


class SingularSystemError(EvaluationError):
    code = "singular_system"


class IntegrandError(QuadratureError):
    code = "invalid_integrand"
    category = ErrorCategory.INPUT


class SampleFileError(QuadratureError):
    code = "sample_file"
    category = ErrorCategory.INPUT


class EmptySamplesError(SampleFileError):
    code = "empty_samples"
