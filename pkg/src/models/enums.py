"""Enums for EquiQuad."""

from enum import Enum


class Direction(Enum):
    """Time direction of an Adams-Bashforth step."""

    FORWARD = "forward"
    BACKWARD = "backward"

    @classmethod
    def from_text(cls, text: str) -> 'Direction':
        """Accept the full names and the short forms fwd/bwd."""
        aliases = {"fwd": cls.FORWARD, "bwd": cls.BACKWARD}
        key = text.strip().lower()
        if key in aliases:
            return aliases[key]
        return cls(key)


class OutputKind(Enum):
    """Supported CLI output formats."""

    EXACT = "exact"
    JSON = "json"
    CSV = "csv"


class CompositeBase(Enum):
    """Composite rule a corrected rule can be compared against."""

    TRAPEZOID = "trapezoid"
    MIDPOINT = "midpoint"
    MIXED = "mixed"
