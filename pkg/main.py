#!/usr/bin/env python3
"""
EquiQuad
Main entry point for the command-line tool
"""

from dotenv import load_dotenv

# Load environment variables from .env file if it exists
load_dotenv()

from src.config.settings import load_settings  # noqa: E402
from src.utils.logging_config import setup_logging  # noqa: E402


def main():
    """Configure logging from the settings and run the CLI."""
    settings = load_settings()
    setup_logging(log_level=settings.log_level, log_dir=settings.log_dir)

    from src.cli.commands import cli

    cli(prog_name="equiquad")


if __name__ == "__main__":
    main()
