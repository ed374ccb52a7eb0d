"""Logging configuration for EquiQuad."""

import logging
import logging.handlers
import os
import sys
from pathlib import Path
from typing import Any, Optional

import structlog


# Processors shared by structlog loggers and foreign (stdlib) records
_SHARED_PROCESSORS = [
    structlog.contextvars.merge_contextvars,
    structlog.stdlib.add_logger_name,
    structlog.stdlib.add_log_level,
    structlog.processors.TimeStamper(fmt="iso", utc=True),
]


class LoggingConfig:
    """Centralized logging configuration."""

    def __init__(
        self,
        log_level: str = "WARNING",
        log_dir: Optional[str] = None,
        max_file_size: int = 10 * 1024 * 1024,  # 10MB
        backup_count: int = 5,
        enable_console: bool = True,
        colors: Optional[bool] = None
    ):
        """Initialize logging configuration.

        Args:
            log_level: Logging level (DEBUG, INFO, WARNING, ERROR, CRITICAL)
            log_dir: Directory for the JSON log file; no file log when None
            max_file_size: Maximum size of each log file in bytes
            backup_count: Number of backup files to keep
            enable_console: Whether to log to stderr
            colors: Force colored console output; defaults to stderr being a TTY
        """
        self.log_level = getattr(logging, log_level.upper(), logging.WARNING)
        self.log_dir = Path(log_dir) if log_dir else None
        self.max_file_size = max_file_size
        self.backup_count = backup_count
        self.enable_console = enable_console
        self.colors = sys.stderr.isatty() if colors is None else colors

        if self.log_dir is not None:
            self.log_dir.mkdir(parents=True, exist_ok=True)

        self._setup_logging()

    def _setup_logging(self):
        """Route structlog through stdlib handlers."""
        structlog.configure(
            processors=_SHARED_PROCESSORS + [
                structlog.stdlib.ProcessorFormatter.wrap_for_formatter,
            ],
            logger_factory=structlog.stdlib.LoggerFactory(),
            wrapper_class=structlog.stdlib.BoundLogger,
            cache_logger_on_first_use=False,
        )

        root_logger = logging.getLogger()
        root_logger.setLevel(self.log_level)
        root_logger.handlers.clear()

        # Results go to stdout, so the console log uses stderr
        if self.enable_console:
            console_handler = logging.StreamHandler(sys.stderr)
            console_handler.setLevel(self.log_level)
            console_handler.setFormatter(structlog.stdlib.ProcessorFormatter(
                processors=[
                    structlog.stdlib.ProcessorFormatter.remove_processors_meta,
                    structlog.dev.ConsoleRenderer(colors=self.colors),
                ],
                foreign_pre_chain=_SHARED_PROCESSORS,
            ))
            root_logger.addHandler(console_handler)

        if self.log_dir is not None:
            file_handler = logging.handlers.RotatingFileHandler(
                filename=self.log_dir / "equiquad.log",
                maxBytes=self.max_file_size,
                backupCount=self.backup_count,
                encoding='utf-8'
            )
            file_handler.setLevel(self.log_level)
            file_handler.setFormatter(structlog.stdlib.ProcessorFormatter(
                processors=[
                    structlog.stdlib.ProcessorFormatter.remove_processors_meta,
                    structlog.processors.JSONRenderer(),
                ],
                foreign_pre_chain=_SHARED_PROCESSORS,
            ))
            root_logger.addHandler(file_handler)

    def set_level(self, log_level: str):
        """Change the level of the root logger and its handlers in place."""
        self.log_level = getattr(logging, log_level.upper(), self.log_level)
        root_logger = logging.getLogger()
        root_logger.setLevel(self.log_level)
        for handler in root_logger.handlers:
            handler.setLevel(self.log_level)

    def get_logger(self, name: str) -> structlog.stdlib.BoundLogger:
        """Get a logger with the specified name.

        Args:
            name: Logger name

        Returns:
            Configured structlog logger
        """
        return structlog.get_logger(name)


class CommandLogger:
    """Logger for CLI command invocations."""

    def __init__(self, logger: Any):
        """Initialize command logger.

        Args:
            logger: Logger instance to use
        """
        self.logger = logger

    def log_command(
        self,
        command: str,
        exit_code: int,
        elapsed_ms: float,
        **params: Any
    ):
        """Log a finished command.

        Args:
            command: Sub-command name
            exit_code: Process exit status the command produced
            elapsed_ms: Wall time in milliseconds
            **params: Command parameters worth recording
        """
        log = self.logger.bind(command=command, exit_code=exit_code, elapsed_ms=round(elapsed_ms, 3))
        if exit_code == 0:
            log.info("command finished", **params)
        else:
            log.warning("command failed", **params)


class ErrorLogger:
    """Logger for errors and exceptions."""

    def __init__(self, logger: Any):
        """Initialize error logger.

        Args:
            logger: Logger instance to use
        """
        self.logger = logger

    def log_exception(
        self,
        exception: Exception,
        context: Optional[str] = None,
        extra_data: Optional[dict] = None
    ):
        """Log an exception with context.

        Args:
            exception: Exception to log
            context: Additional context information
            extra_data: Extra data to include in log
        """
        self.logger.error(
            context or "exception occurred",
            error_type=type(exception).__name__,
            error=str(exception),
            **(extra_data or {})
        )

    def log_validation_error(
        self,
        field: str,
        value: Any,
        error_message: str,
        command: str = "unknown"
    ):
        """Log a parameter that failed validation.

        Args:
            field: Parameter name that failed validation
            value: Offending raw value
            error_message: Validation error message
            command: Command being validated
        """
        self.logger.warning(
            "validation error",
            command=command,
            field=field,
            value=str(value),
            error=error_message
        )


# Global logging configuration
_logging_config: Optional[LoggingConfig] = None


def setup_logging(
    log_level: Optional[str] = None,
    log_dir: Optional[str] = None,
    enable_console: bool = True
) -> LoggingConfig:
    """Setup global logging configuration.

    Args:
        log_level: Logging level; falls back to EQUIQUAD_LOG_LEVEL
        log_dir: Log directory; falls back to EQUIQUAD_LOG_DIR
        enable_console: Whether to enable console logging

    Returns:
        LoggingConfig instance
    """
    global _logging_config

    log_level = log_level or os.getenv('EQUIQUAD_LOG_LEVEL', 'WARNING')
    log_dir = log_dir or os.getenv('EQUIQUAD_LOG_DIR') or None

    _logging_config = LoggingConfig(
        log_level=log_level,
        log_dir=log_dir,
        enable_console=enable_console
    )

    return _logging_config


def get_logging_config() -> LoggingConfig:
    """Return the global configuration, creating it on first use."""
    if _logging_config is None:
        setup_logging()
    return _logging_config


def _configure_library_logging():
    """Send events to stdlib logging without touching its handlers or levels."""
    structlog.configure(
        processors=[
            structlog.stdlib.filter_by_level,
            structlog.contextvars.merge_contextvars,
            structlog.processors.KeyValueRenderer(key_order=["event"], drop_missing=True),
        ],
        logger_factory=structlog.stdlib.LoggerFactory(),
        wrapper_class=structlog.stdlib.BoundLogger,
        cache_logger_on_first_use=False,
    )


def get_logger(name: str) -> structlog.stdlib.BoundLogger:
    """Get a logger instance.

    Handlers are only installed by setup_logging(); until then records go
    to whatever the host application configured.

    Args:
        name: Logger name

    Returns:
        Logger instance
    """
    if not structlog.is_configured():
        _configure_library_logging()
    return structlog.get_logger(name)


def get_command_logger() -> CommandLogger:
    """Get a command logger instance."""
    return CommandLogger(get_logger('equiquad.cli'))


def get_error_logger() -> ErrorLogger:
    """Get an error logger instance."""
    return ErrorLogger(get_logger('equiquad.error'))
