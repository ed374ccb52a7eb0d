"""Applying rules: integration, paired estimates and convergence studies."""

from .convergence import estimate_order
from .integrands import Integrand, Polynomial, monomial, parse_integrand
from .integrate import integrate_function, integrate_samples, paired_estimate
from .oracle import vandermonde_oracle
from .samples_io import read_samples

__all__ = [
    "estimate_order",
    "Integrand",
    "Polynomial",
    "monomial",
    "parse_integrand",
    "integrate_function",
    "integrate_samples",
    "paired_estimate",
    "vandermonde_oracle",
    "read_samples",
]
