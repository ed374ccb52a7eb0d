"""Pre-sampled integrand data."""

import math
from fractions import Fraction
from typing import Any, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from .fields import RationalField
from .rule_spec import RuleSpec
from ..utils.exceptions import EmptyRangeError, RuleParameterError


class SampleSet(BaseModel):
    """Ordinates at equispaced abscissae with the terminal offsets.

    values[0] is the sample at node 0, which lies alpha steps inside the
    lower terminal. Values are floats, or Fractions for exact evaluation.
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    values: Tuple[Any, ...] = Field(..., description="Ordinates in node order")
    h: RationalField = Field(..., description="Node spacing")
    alpha: RationalField = Field(Fraction(0), description="Lower terminal offset")
    beta: RationalField = Field(Fraction(0), description="Upper terminal offset")

    @field_validator('values', mode='before')
    @classmethod
    def normalize_values(cls, values):
        normalized = []
        for value in values:
            if isinstance(value, (Fraction, int)) and not isinstance(value, bool):
                normalized.append(Fraction(value))
            else:
                normalized.append(float(value))
        return tuple(normalized)

    @model_validator(mode='after')
    def check_samples(self) -> 'SampleSet':
        if not self.values:
            raise RuleParameterError(rule="SampleSet", detail="at least one sample is required")
        if self.h <= 0:
            raise RuleParameterError(rule="SampleSet", detail=f"h must be positive, got {self.h}")
        length = self.n + self.alpha + self.beta
        if length <= 0:
            raise EmptyRangeError(length=length)
        return self

    @property
    def n(self) -> int:
        return len(self.values) - 1

    @property
    def is_exact(self) -> bool:
        """True when every ordinate is a Fraction."""
        return all(isinstance(value, Fraction) for value in self.values)

    @property
    def is_finite(self) -> bool:
        return all(isinstance(value, Fraction) or math.isfinite(value) for value in self.values)

    def spec(self, m_left: int, m_right: Optional[int] = None) -> RuleSpec:
        """Rule parameters over these samples."""
        return RuleSpec(alpha=self.alpha, beta=self.beta, m_left=m_left, m_right=m_right, n=self.n)
