"""Data models for EquiQuad."""

from .enums import CompositeBase, Direction, OutputKind
from .fields import RationalField
from .rule_spec import RuleSpec
from .correction_set import CorrectionSet
from .weight_vector import CompositeCorrections, PhysicalRule, WeightVector
from .samples import SampleSet
from .convergence import ConvergenceLevel, ConvergenceReport, PairedEstimate
from .output_format import OutputFormat

__all__ = [
    "CompositeBase",
    "Direction",
    "OutputKind",
    "RationalField",
    "RuleSpec",
    "CorrectionSet",
    "CompositeCorrections",
    "PhysicalRule",
    "WeightVector",
    "SampleSet",
    "ConvergenceLevel",
    "ConvergenceReport",
    "PairedEstimate",
    "OutputFormat",
]
