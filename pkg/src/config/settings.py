"""Runtime settings for EquiQuad."""

import os
from typing import Optional

from dotenv import load_dotenv
from pydantic import BaseModel, Field, field_validator

from ..models.enums import OutputKind


ENV_PREFIX = "EQUIQUAD_"


class Settings(BaseModel):
    """Settings read from the environment; CLI options override them."""

    log_level: str = Field("WARNING", description="Root log level")
    log_dir: Optional[str] = Field(None, description="Directory for the JSON log file")
    output_format: OutputKind = Field(OutputKind.EXACT, description="Default CLI output format")
    decimal_digits: int = Field(17, ge=1, le=100, description="Significant digits for decimal output")
    max_workers: int = Field(1, ge=1, description="Worker threads for convergence levels")
    cache_size: int = Field(256, ge=0, description="Correction sets kept in the memo cache")

    @field_validator('log_level')
    @classmethod
    def normalize_level(cls, value: str) -> str:
        """Upper-case the level name."""
        return value.strip().upper()

    @classmethod
    def from_env(cls, environ: Optional[dict] = None) -> 'Settings':
        """Build settings from EQUIQUAD_* variables.

        Args:
            environ: Mapping to read instead of os.environ

        Returns:
            Settings instance
        """
        environ = os.environ if environ is None else environ
        fields = {
            'log_level': 'LOG_LEVEL',
            'log_dir': 'LOG_DIR',
            'output_format': 'FORMAT',
            'decimal_digits': 'DIGITS',
            'max_workers': 'MAX_WORKERS',
            'cache_size': 'CACHE_SIZE',
        }
        values = {}
        for field_name, suffix in fields.items():
            raw = environ.get(ENV_PREFIX + suffix)
            if raw not in (None, ""):
                values[field_name] = raw
        return cls(**values)


_settings: Optional[Settings] = None


def load_settings(dotenv_path: Optional[str] = None, reload: bool = False) -> Settings:
    """Load settings once, reading an optional .env file first.

    Args:
        dotenv_path: Explicit .env file; python-dotenv searches upwards when None
        reload: Discard previously loaded settings

    Returns:
        Settings instance
    """
    global _settings

    if _settings is None or reload:
        load_dotenv(dotenv_path)
        _settings = Settings.from_env()

    return _settings
