"""Command-line interface for EquiQuad."""

from .commands import cli

__all__ = ["cli"]
