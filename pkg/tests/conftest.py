"""
Pytest configuration and shared fixtures.
"""

import logging
import random
from fractions import Fraction

import pytest
import structlog
from click.testing import CliRunner

from src.utils import logging_config


@pytest.fixture
def rng():
    """Seeded random source for property checks."""
    return random.Random(20240501)


@pytest.fixture
def runner():
    """Click runner with stdout and stderr kept apart."""
    try:
        return CliRunner(mix_stderr=False)
    except TypeError:
        # click >= 8.2 dropped mix_stderr and always keeps the streams apart.
        return CliRunner()


@pytest.fixture
def sample_file(tmp_path):
    """Write ordinates to a sample file and return its path."""

    def _write(lines, name="samples.txt"):
        path = tmp_path / name
        path.write_text("\n".join(str(line) for line in lines) + "\n", encoding="utf-8")
        return path

    return _write


def _is_pytest_handler(handler):
    return type(handler).__module__.startswith("_pytest")


@pytest.fixture
def restore_logging():
    """Put the root handlers, structlog and the global logging config back after a test.

    pytest's own capture handlers are managed per test phase and left alone.
    """
    root = logging.getLogger()
    handlers = [handler for handler in root.handlers if not _is_pytest_handler(handler)]
    level = root.level
    saved_config = logging_config._logging_config
    saved_structlog = structlog.get_config()

    yield

    for handler in root.handlers:
        if handler not in handlers and not _is_pytest_handler(handler):
            handler.close()
    root.handlers[:] = [handler for handler in root.handlers if _is_pytest_handler(handler)] + handlers
    root.setLevel(level)
    logging_config._logging_config = saved_config
    structlog.configure(**saved_structlog)


def random_rational(rng, low=-3, high=3, denominators=(1, 2, 3, 4, 5, 6)):
    """Random rational in [low, high] with a denominator from the list."""
    den = rng.choice(denominators)
    return Fraction(rng.randint(low * den, high * den), den)
