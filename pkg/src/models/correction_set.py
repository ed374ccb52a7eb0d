"""Correction set model."""

from typing import Tuple

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from .fields import RationalField, require_non_negative
from ..corrections.solver import b_to_c
from ..utils.exceptions import RuleParameterError


class CorrectionSet(BaseModel):
    """The m+1 corrections for one end of a rule, bound to its alpha.

    c is ordered outermost first: c[0] adjusts the weight of the end node,
    c[1] the next node inward, and so on.
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    alpha: RationalField = Field(..., description="Terminal offset in steps, measured inward")
    m: int = Field(..., description="Highest degree made exact")
    b: Tuple[RationalField, ...] = Field(..., description="Difference-form coefficients b_0..b_m")
    c: Tuple[RationalField, ...] = Field(..., description="Ordinate corrections c_0..c_m")

    @field_validator('m')
    @classmethod
    def check_m(cls, value: int) -> int:
        return require_non_negative("CorrectionSet", "m", value)

    @model_validator(mode='after')
    def check_consistency(self) -> 'CorrectionSet':
        """b and c must both have m+1 entries and satisfy c = b_to_c(b)."""
        if len(self.b) != self.m + 1 or len(self.c) != self.m + 1:
            raise RuleParameterError(
                rule="CorrectionSet",
                detail=f"expected {self.m + 1} coefficients, got {len(self.b)} b and {len(self.c)} c"
            )
        if tuple(b_to_c(self.b)) != self.c:
            raise RuleParameterError(rule="CorrectionSet", detail="c does not match b_to_c(b)")
        return self

    @property
    def total(self):
        """Sum of the corrections, which equals alpha - 1/2."""
        return sum(self.c)
