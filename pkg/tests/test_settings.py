"""Tests for runtime settings and output formats."""

from fractions import Fraction as F

import pytest
from pydantic import ValidationError

from src.cli.formatters import ResultFormatter, render_estimate
from src.config import settings as settings_module
from src.config.settings import Settings, load_settings
from src.models.enums import Direction, OutputKind
from src.models.output_format import OutputFormat


@pytest.mark.unit
class TestSettings:
    """Test settings read from the environment."""

    def test_defaults(self):
        """Test defaults without any variables."""
        settings = Settings.from_env({})

        assert settings.log_level == "WARNING"
        assert settings.log_dir is None
        assert settings.output_format is OutputKind.EXACT
        assert settings.decimal_digits == 17
        assert settings.max_workers == 1
        assert settings.cache_size == 256

    def test_from_environment(self):
        """Test EQUIQUAD_* variables."""
        settings = Settings.from_env({
            "EQUIQUAD_LOG_LEVEL": "debug",
            "EQUIQUAD_FORMAT": "json",
            "EQUIQUAD_DIGITS": "8",
            "EQUIQUAD_MAX_WORKERS": "4",
            "EQUIQUAD_CACHE_SIZE": "0",
            "EQUIQUAD_LOG_DIR": "",
        })

        assert settings.log_level == "DEBUG"
        assert settings.output_format is OutputKind.JSON
        assert settings.decimal_digits == 8
        assert settings.max_workers == 4
        assert settings.cache_size == 0
        assert settings.log_dir is None

    @pytest.mark.parametrize("variables", [
        {"EQUIQUAD_FORMAT": "xml"},
        {"EQUIQUAD_DIGITS": "0"},
        {"EQUIQUAD_MAX_WORKERS": "0"},
    ])
    def test_invalid_values(self, variables):
        """Test out-of-range settings are rejected."""
        with pytest.raises(ValidationError):
            Settings.from_env(variables)

    def test_dotenv_file(self, tmp_path, monkeypatch):
        """Test a .env file feeds load_settings."""
        env_file = tmp_path / ".env"
        env_file.write_text("EQUIQUAD_DIGITS=5\n", encoding="utf-8")
        monkeypatch.delenv("EQUIQUAD_DIGITS", raising=False)
        monkeypatch.setattr(settings_module, "_settings", None)

        try:
            settings = load_settings(str(env_file), reload=True)
            assert settings.decimal_digits == 5
            assert load_settings() is settings
        finally:
            monkeypatch.delenv("EQUIQUAD_DIGITS", raising=False)


@pytest.mark.unit
class TestOutputFormat:
    """Test the output format model and formatter."""

    def test_digits_range(self):
        """Test decimal_digits stays within 1..100."""
        with pytest.raises(ValidationError):
            OutputFormat(decimal_digits=0)
        with pytest.raises(ValidationError):
            OutputFormat(decimal_digits=101)

    def test_text(self):
        """Test values rendered as text."""
        formatter = ResultFormatter(OutputFormat(decimal_digits=4))

        assert formatter.text(F(-5, 8)) == "-5/8"
        assert formatter.text(0.5) == "0.5"
        assert formatter.text(None) == ""
        assert formatter.text(3) == "3"

    def test_decimal_text(self):
        """Test rationals as decimals."""
        formatter = ResultFormatter(OutputFormat(decimal_digits=4), decimal=True)

        assert formatter.text(F(2, 3)) == "0.6667"

    def test_json_values(self):
        """Test JSON conversion of nested values."""
        formatter = ResultFormatter(OutputFormat(kind=OutputKind.JSON))

        assert formatter.json_value({"c": [F(1, 2), 2.5]}) == {"c": ["1/2", 2.5]}
        assert render_estimate(formatter, F(1, 3)) == '{\n  "estimate": "1/3"\n}'

    def test_csv_estimate(self):
        """Test a one-row CSV table."""
        formatter = ResultFormatter(OutputFormat(kind=OutputKind.CSV))

        assert render_estimate(formatter, F(1, 3)) == "estimate\n1/3"


@pytest.mark.unit
class TestEnums:
    """Test enum parsing."""

    @pytest.mark.parametrize("text,expected", [
        ("fwd", Direction.FORWARD),
        ("Backward", Direction.BACKWARD),
        (" bwd ", Direction.BACKWARD),
    ])
    def test_direction_from_text(self, text, expected):
        """Test full names and short forms."""
        assert Direction.from_text(text) is expected

    def test_direction_invalid(self):
        """Test unknown directions."""
        with pytest.raises(ValueError):
            Direction.from_text("up")
