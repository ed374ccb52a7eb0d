"""CLI output format model."""

from pydantic import BaseModel, ConfigDict, Field

from .enums import OutputKind


class OutputFormat(BaseModel):
    """How results are rendered on stdout.

    exact renders rationals as "p/q"; json renders rationals as strings and
    reals as numbers; csv writes a header row followed by data rows.
    """

    model_config = ConfigDict(frozen=True)

    kind: OutputKind = Field(OutputKind.EXACT, description="Rendering style")
    decimal_digits: int = Field(17, ge=1, le=100, description="Significant digits for decimals")
