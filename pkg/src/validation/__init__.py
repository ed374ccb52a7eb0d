"""Validation utilities for EquiQuad."""

from .spec_validators import (
    RuleParameterValidator,
    ValidationIssue,
    ValidationResult,
)

__all__ = [
    "RuleParameterValidator",
    "ValidationIssue",
    "ValidationResult",
]
