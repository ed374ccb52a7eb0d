"""Test package for EquiQuad."""
