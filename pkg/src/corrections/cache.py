"""Memoized correction sets."""

from fractions import Fraction
from functools import lru_cache

from .solver import b_to_c, solve_b
from ..arith.rational import RationalLike, to_rational
from ..models.correction_set import CorrectionSet
from ..utils.error_messages import error_messages
from ..utils.logging_config import get_logger

logger = get_logger(__name__)

# m above this produces unwieldy coefficients; still allowed
LARGE_M = 12

DEFAULT_CACHE_SIZE = 256


def _build(alpha: Fraction, m: int) -> CorrectionSet:
    logger.debug("correction set cache miss", alpha=str(alpha), m=m)
    if m > LARGE_M:
        logger.warning(error_messages.get_warning_message("large_m", {"m": m}))
    b = solve_b(alpha, m)
    return CorrectionSet(alpha=alpha, m=m, b=tuple(b), c=tuple(b_to_c(b)))


_cached_build = lru_cache(maxsize=DEFAULT_CACHE_SIZE)(_build)


def correction_set(alpha: RationalLike, m: int) -> CorrectionSet:
    """Corrections c_0..c_m and b_0..b_m for one end.

    Identical (alpha, m) keys return the identical object while it stays
    in the cache.

    Args:
        alpha: Terminal offset from the end node in steps
        m: Correction depth

    Returns:
        CorrectionSet
    """
    return _cached_build(to_rational(alpha), m)


def configure_cache(maxsize: int):
    """Replace the memo cache with one holding ``maxsize`` entries."""
    global _cached_build
    _cached_build = lru_cache(maxsize=maxsize)(_build)


def clear_cache():
    _cached_build.cache_clear()


def cache_info():
    return _cached_build.cache_info()
