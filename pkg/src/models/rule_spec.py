"""Rule parameterization model."""

from fractions import Fraction
from typing import Optional

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from .fields import RationalField, require_non_negative
from ..utils.exceptions import EmptyRangeError


class RuleSpec(BaseModel):
    """Full parameterization (alpha, beta, m_left, m_right, n) of one rule.

    Nodes sit at the integer indices 0..n. The lower terminal lies at
    -alpha and the upper one at n + beta, both in units of the step.
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    alpha: RationalField = Field(..., description="Offset of the first node from the lower terminal")
    beta: RationalField = Field(..., description="Offset of the last node from the upper terminal")
    m_left: int = Field(0, description="Correction depth at the lower end")
    m_right: Optional[int] = Field(None, description="Correction depth at the upper end (defaults to m_left)")
    n: int = Field(..., description="Index of the last base node")

    @model_validator(mode='before')
    @classmethod
    def default_m_right(cls, values):
        """Use m_left at the upper end unless m_right is given."""
        if isinstance(values, dict) and values.get('m_right') is None:
            values = dict(values)
            values['m_right'] = values.get('m_left', 0)
        return values

    @field_validator('m_left', 'm_right', 'n')
    @classmethod
    def check_non_negative(cls, value, info):
        return require_non_negative("RuleSpec", info.field_name, value)

    @model_validator(mode='after')
    def check_range(self) -> 'RuleSpec':
        """The integration range must have positive length."""
        if self.length <= 0:
            raise EmptyRangeError(length=self.length)
        return self

    @property
    def length(self) -> Fraction:
        """Range length n + alpha + beta in steps."""
        return self.n + self.alpha + self.beta

    @property
    def lo(self) -> int:
        """Smallest node index carrying a weight."""
        return min(0, self.n - self.m_right)

    @property
    def hi(self) -> int:
        """Largest node index carrying a weight."""
        return max(self.n, self.m_left)

    @property
    def is_symmetric(self) -> bool:
        return self.alpha == self.beta and self.m_left == self.m_right

    @property
    def overlapping(self) -> bool:
        """True when the two end corrections touch a common node."""
        return self.m_left + self.m_right >= self.n

    @property
    def predicted_degree(self) -> int:
        """Exactness degree the construction guarantees.

        min(m_left, m_right), plus one for symmetric rules with even m.
        """
        degree = min(self.m_left, self.m_right)
        if self.is_symmetric and self.m_left % 2 == 0:
            degree += 1
        return degree

    def mirrored(self) -> 'RuleSpec':
        """The same rule seen from the other end."""
        return RuleSpec(
            alpha=self.beta,
            beta=self.alpha,
            m_left=self.m_right,
            m_right=self.m_left,
            n=self.n,
        )

    def with_depth(self, m_left: int, m_right: Optional[int] = None) -> 'RuleSpec':
        """Copy with other correction depths."""
        return RuleSpec(alpha=self.alpha, beta=self.beta, m_left=m_left, m_right=m_right, n=self.n)

    def with_n(self, n: int) -> 'RuleSpec':
        """Copy on another node span."""
        return RuleSpec(alpha=self.alpha, beta=self.beta, m_left=self.m_left, m_right=self.m_right, n=n)
