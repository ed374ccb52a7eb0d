"""Shared utilities: logging, error messages and exception types."""
