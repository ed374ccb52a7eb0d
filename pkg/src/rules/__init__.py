"""Weight construction and the catalogue of classical rules."""

from .builder import (
    build_weights,
    composite_base,
    composite_baseline,
    composite_corrections,
    exact_moment,
    exactness_degree,
    map_to_interval,
    monomial_moment,
)
from .catalog import (
    adams_bashforth,
    adams_moulton,
    catalog_names,
    discretized_corrected_midpoint,
    discretized_corrected_trapezoid,
    gregory_rule,
    lacroix_rule,
    newton_cotes_closed,
    newton_cotes_open,
    resolve_rule,
)

__all__ = [
    "build_weights",
    "composite_base",
    "composite_baseline",
    "composite_corrections",
    "exact_moment",
    "exactness_degree",
    "map_to_interval",
    "monomial_moment",
    "adams_bashforth",
    "adams_moulton",
    "catalog_names",
    "discretized_corrected_midpoint",
    "discretized_corrected_trapezoid",
    "gregory_rule",
    "lacroix_rule",
    "newton_cotes_closed",
    "newton_cotes_open",
    "resolve_rule",
]
