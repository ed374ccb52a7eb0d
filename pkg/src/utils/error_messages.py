"""Error message utilities for user-friendly diagnostics."""

from typing import Dict, Any, Optional
from enum import Enum


class ErrorCategory(Enum):
    """Categories of errors for better organization."""
    VALIDATION = "validation"
    ARITHMETIC = "arithmetic"
    RULE = "rule"
    EVALUATION = "evaluation"
    INPUT = "input"
    SYSTEM = "system"


class ErrorMessageGenerator:
    """Generate user-friendly error messages."""

    # Error message templates
    ERROR_MESSAGES = {
        # Validation errors
        "negative": "{field_name} must be a non-negative integer, got {value}.",
        "inverted_limits": "Lower limit {a} must be less than upper limit {b}.",

        # Arithmetic errors
        "zero_denominator": "Zero denominator in rational value {text}.",
        "invalid_rational": "Cannot read '{text}' as a rational number (expected an integer, p/q or a finite decimal).",
        "unsupported_rational": "Cannot convert {value!r} to a rational number.",

        # Rule errors
        "empty_range": "Empty or inverted range: n + alpha + beta = {length} must be positive.",
        "invalid_rule_parameter": "Invalid parameter for {rule}: {detail}.",
        "unknown_rule": "Unknown rule '{name}'. Valid names: {valid}.",
        "no_composite_base": "No composite base rule for alpha={alpha}, beta={beta}: both must be multiples of 1/2.",

        # Evaluation errors
        "non_finite": "Integrand is not finite at node {index} (t = {abscissa}): {value}.",
        "missing_samples": "Corrections need samples outside the provided set at indices {missing}.",
        "singular_system": "Singular moment system: node indices {indices} are not distinct.",
        "inexact_value": "Exact evaluation needs rational ordinates, got {value!r} at node {index}.",

        # Input errors
        "invalid_integrand": "Unknown integrand '{text}'. Use poly:c0,c1,..., monomial:k, exp, sin or cos.",
        "sample_file": "Cannot read samples from {path} line {line}: {detail}.",
        "empty_samples": "No samples found in {path}.",

        # System errors
        "internal_error": "An internal error occurred.",
    }

    # Warning message templates
    WARNING_MESSAGES = {
        "nodes_outside_range": "Some nodes lie outside the range of integration.",
        "overlapping_corrections": "End corrections overlap; their effects are added.",
        "large_m": "Corrections for m = {m} have very large rational coefficients.",
    }

    def get_error_message(
        self,
        error_code: str,
        category: ErrorCategory = ErrorCategory.SYSTEM,
        context: Optional[Dict[str, Any]] = None,
        custom_message: Optional[str] = None
    ) -> str:
        """Get a user-friendly error message.

        Args:
            error_code: Error code to look up
            category: Category of the error
            context: Additional context for message formatting
            custom_message: Custom message to use instead of template

        Returns:
            User-friendly error message
        """
        if custom_message:
            return custom_message

        template = self.ERROR_MESSAGES.get(error_code, "An unexpected error occurred.")

        if context:
            try:
                return template.format(**context)
            except (KeyError, ValueError, IndexError):
                # If formatting fails, return the template as-is
                return template

        return template

    def get_warning_message(
        self,
        warning_code: str,
        context: Optional[Dict[str, Any]] = None
    ) -> str:
        """Get a user-friendly warning message.

        Args:
            warning_code: Warning code to look up
            context: Additional context for message formatting

        Returns:
            User-friendly warning message
        """
        template = self.WARNING_MESSAGES.get(warning_code, "Warning: Please review your input.")

        if context:
            try:
                return template.format(**context)
            except (KeyError, ValueError, IndexError):
                return template

        return template


# Global instance for easy access
error_messages = ErrorMessageGenerator()
