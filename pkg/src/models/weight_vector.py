"""Weight vector models."""

from fractions import Fraction
from typing import List, NamedTuple, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, Field

from .enums import CompositeBase
from .fields import RationalField
from .rule_spec import RuleSpec


class WeightVector(BaseModel):
    """Exact weights at consecutive node indices lo..hi.

    Indices below 0 or above n appear when corrections overshoot the unit
    block; those nodes carry only correction weight.
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    lo: int = Field(..., description="Index of the first stored weight")
    weights: Tuple[RationalField, ...] = Field(..., description="Weights at lo, lo+1, ...")
    spec: RuleSpec = Field(..., description="Parameterization the weights realize")

    @property
    def hi(self) -> int:
        return self.lo + len(self.weights) - 1

    @property
    def indices(self) -> range:
        return range(self.lo, self.hi + 1)

    @property
    def total(self) -> Fraction:
        """Sum of the weights, n + alpha + beta for every valid rule."""
        return sum(self.weights, Fraction(0))

    def weight_at(self, index: int) -> Fraction:
        """Weight at a node index, 0 outside the stored range."""
        if self.lo <= index <= self.hi:
            return self.weights[index - self.lo]
        return Fraction(0)

    @property
    def is_palindromic(self) -> bool:
        """True when weight_at(i) == weight_at(n - i) for every index."""
        n = self.spec.n
        return all(self.weight_at(i) == self.weight_at(n - i) for i in self.indices)

    def mirrored(self) -> 'WeightVector':
        """Reverse the rule under i -> n - i."""
        return WeightVector(
            lo=self.spec.n - self.hi,
            weights=tuple(reversed(self.weights)),
            spec=self.spec.mirrored(),
        )

    def as_floats(self) -> np.ndarray:
        return np.array([float(w) for w in self.weights], dtype=float)


class PhysicalRule(BaseModel):
    """A weight vector placed on the interval [a, b].

    Weights are already multiplied by h. The float arrays serve floating
    evaluation; the exact_* tuples hold the same values as Fractions.
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    a: float
    b: float
    h: float
    indices: Tuple[int, ...]
    nodes: Tuple[float, ...]
    weights: Tuple[float, ...]
    exact_a: RationalField
    exact_b: RationalField
    exact_h: RationalField
    exact_nodes: Tuple[RationalField, ...]
    exact_weights: Tuple[RationalField, ...]
    source: WeightVector

    @property
    def outside_nodes(self) -> List[int]:
        """Indices whose abscissae fall outside [a, b]."""
        return [
            index for index, node in zip(self.indices, self.exact_nodes)
            if node < self.exact_a or node > self.exact_b
        ]


class CompositeCorrections(NamedTuple):
    """A rule re-expressed as a composite rule plus end corrections."""

    base: CompositeBase
    lo: int
    values: Tuple[Fraction, ...]

    def at(self, index: int) -> Fraction:
        if self.lo <= index < self.lo + len(self.values):
            return self.values[index - self.lo]
        return Fraction(0)

    def leading(self, count: int) -> List[Fraction]:
        """First ``count`` corrections starting at lo."""
        return list(self.values[:count])
