"""EquiQuad: end-corrected equispaced quadrature in exact rational arithmetic."""
