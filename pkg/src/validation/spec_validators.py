"""Validation of raw rule parameters from the command line."""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Tuple

from ..arith.rational import parse_rational
from ..corrections.cache import LARGE_M
from ..models.rule_spec import RuleSpec
from ..utils.error_messages import ErrorCategory, error_messages
from ..utils.exceptions import QuadratureError, RationalError
from ..utils.logging_config import get_error_logger


@dataclass
class ValidationIssue:
    """Represents a validation error or warning."""
    field: str
    message: str
    code: str


@dataclass
class ValidationResult:
    """Result of parameter validation."""
    is_valid: bool = True
    errors: List[ValidationIssue] = field(default_factory=list)
    warnings: List[ValidationIssue] = field(default_factory=list)
    spec: Optional[RuleSpec] = None

    def add_error(self, field: str, message: str, code: str = "invalid"):
        """Add a validation error."""
        self.errors.append(ValidationIssue(field, message, code))
        self.is_valid = False

    def add_warning(self, field: str, message: str, code: str = "warning"):
        """Add a validation warning."""
        self.warnings.append(ValidationIssue(field, message, code))

    def get_field_errors(self, field: str) -> List[ValidationIssue]:
        """Get errors for a specific field."""
        return [error for error in self.errors if error.field == field]

    def get_field_warnings(self, field: str) -> List[ValidationIssue]:
        """Get warnings for a specific field."""
        return [warning for warning in self.warnings if warning.field == field]

    @property
    def error_codes(self) -> List[str]:
        return [error.code for error in self.errors]

    @property
    def warning_codes(self) -> List[str]:
        return [warning.code for warning in self.warnings]


class RuleParameterValidator:
    """Validator for rule parameters given as text and integers."""

    def __init__(self, command: str = "unknown"):
        self.command = command
        self.error_logger = get_error_logger()

    def _error(self, result: ValidationResult, field: str, code: str, category: ErrorCategory, raw, **context):
        message = error_messages.get_error_message(code, category, context)
        result.add_error(field, message, code)
        self.error_logger.log_validation_error(field, raw, message, self.command)

    def _rational(self, result: ValidationResult, field: str, text) -> Optional[Fraction]:
        if isinstance(text, Fraction):
            return text
        try:
            return parse_rational(str(text))
        except RationalError as exc:
            message = str(exc)
            result.add_error(field, message, exc.code)
            self.error_logger.log_validation_error(field, text, message, self.command)
            return None

    def _count(self, result: ValidationResult, field: str, value: Optional[int]) -> Optional[int]:
        if value is None:
            return None
        if value < 0:
            self._error(result, field, "negative", ErrorCategory.VALIDATION, value,
                        field_name=field, value=value)
            return None
        return value

    def validate_rule_params(
        self,
        alpha,
        beta,
        m: int,
        n: int,
        m_right: Optional[int] = None,
        limits: Optional[Tuple[float, float]] = None
    ) -> ValidationResult:
        """Validate rule parameters.

        Args:
            alpha: Lower offset as text or Fraction
            beta: Upper offset as text or Fraction; None means alpha
            m: Correction depth (lower end)
            n: Index of the last node
            m_right: Correction depth at the upper end
            limits: Optional (a, b) interval

        Returns:
            ValidationResult carrying the RuleSpec when valid
        """
        result = ValidationResult()

        alpha_value = self._rational(result, "alpha", alpha)
        beta_value = alpha_value if beta is None else self._rational(result, "beta", beta)
        m_value = self._count(result, "m", m)
        m_right_value = self._count(result, "m_right", m_right)
        n_value = self._count(result, "n", n)

        if limits is not None:
            a, b = limits
            if not a < b:
                self._error(result, "limits", "inverted_limits", ErrorCategory.VALIDATION, limits, a=a, b=b)

        if not result.is_valid or None in (alpha_value, beta_value, m_value, n_value):
            return result

        length = n_value + alpha_value + beta_value
        if length <= 0:
            self._error(result, "n", "empty_range", ErrorCategory.RULE, n_value, length=length)
            return result

        try:
            spec = RuleSpec(alpha=alpha_value, beta=beta_value, m_left=m_value, m_right=m_right_value, n=n_value)
        except QuadratureError as exc:
            result.add_error("spec", str(exc), exc.code)
            return result

        self._check_warnings(result, spec)
        result.spec = spec
        return result

    def _check_warnings(self, result: ValidationResult, spec: RuleSpec):
        if spec.alpha < 0 or spec.beta < 0 or spec.lo < 0 or spec.hi > spec.n:
            result.add_warning(
                "spec", error_messages.get_warning_message("nodes_outside_range"), "nodes_outside_range"
            )
        if spec.overlapping and spec.m_left + spec.m_right > 0:
            result.add_warning(
                "m", error_messages.get_warning_message("overlapping_corrections"), "overlapping_corrections"
            )
        if max(spec.m_left, spec.m_right) > LARGE_M:
            result.add_warning(
                "m",
                error_messages.get_warning_message("large_m", {"m": max(spec.m_left, spec.m_right)}),
                "large_m"
            )

