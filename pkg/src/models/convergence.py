"""Convergence study results."""

import math
from typing import NamedTuple, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, model_validator

from .fields import RationalField
from ..utils.exceptions import RuleParameterError


class ConvergenceLevel(BaseModel):
    """One refinement level of a convergence study."""

    model_config = ConfigDict(frozen=True)

    n: int = Field(..., description="Index of the last base node (nodes - 1)")
    h: float = Field(..., description="Step length")
    estimate: float = Field(..., description="Quadrature result")
    error: float = Field(..., description="Absolute error against the exact value")

    @property
    def nodes(self) -> int:
        return self.n + 1


class ConvergenceReport(BaseModel):
    """Errors, error ratios and the estimated order of a study."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    alpha: RationalField
    beta: RationalField
    m: int
    levels: Tuple[ConvergenceLevel, ...]
    ratios: Tuple[Optional[float], ...] = Field(..., description="error_k / error_(k+1)")
    estimated_order: Optional[float] = Field(None, description="None when any error is zero")
    exact: bool = Field(False, description="True when some level has zero error")

    @model_validator(mode='after')
    def check_shape(self) -> 'ConvergenceReport':
        if len(self.ratios) != max(len(self.levels) - 1, 0):
            raise RuleParameterError(
                rule="ConvergenceReport",
                detail=f"{len(self.levels)} levels need {len(self.levels) - 1} ratios"
            )
        if self.exact and self.estimated_order is not None:
            raise RuleParameterError(rule="ConvergenceReport", detail="exact studies carry no order")
        return self

    @property
    def predicted_order(self) -> int:
        """Error order m + 2 expected for smooth integrands."""
        return self.m + 2

    @property
    def level_orders(self) -> Tuple[Optional[float], ...]:
        """Order estimated from each consecutive pair of levels."""
        orders = []
        for ratio, coarse, fine in zip(self.ratios, self.levels, self.levels[1:]):
            if ratio is None or ratio <= 0:
                orders.append(None)
            else:
                orders.append(math.log(ratio) / math.log(coarse.h / fine.h))
        return tuple(orders)


class PairedEstimate(NamedTuple):
    """Estimates from depths m and m+1 on the same ordinates."""

    estimate: float
    refined: float
    difference: float
