import pytest

from src.core.config import Config


class TestConfig:
    """Environment-driven settings."""

    def test_defaults_validate(self):
        config = Config()
        assert config.validate() is True
        assert config.engine.oracle_window == 16
        assert config.numeric.quadrature_nodes == 64
        assert config.logging.level == "WARNING"

    def test_environment_overrides(self, helpers):
        with helpers.mock_env({"HARTOGS_ORACLE_WINDOW": "8", "LOG_FORMAT": "JSON", "HARTOGS_SUP_TOLERANCE": "1e-4"}):
            config = Config()
        assert config.engine.oracle_window == 8
        assert config.logging.renderer == "json"
        assert config.numeric.sup_tolerance == 1e-4

    @pytest.mark.parametrize(
        ("name", "value", "message"),
        [
            ("LOG_LEVEL", "chatty", "LOG_LEVEL"),
            ("LOG_FORMAT", "xml", "LOG_FORMAT"),
            ("HARTOGS_ORACLE_WINDOW", "0", "HARTOGS_ORACLE_WINDOW"),
            ("HARTOGS_QUADRATURE_NODES", "48", "power of two"),
            ("HARTOGS_SUP_SAMPLES", "8", "HARTOGS_SUP_SAMPLES"),
            ("HARTOGS_HULL_TOLERANCE", "0", "HARTOGS_HULL_TOLERANCE must be positive"),
            ("HARTOGS_LOG_DIGITS", "30", "HARTOGS_LOG_DIGITS"),
        ],
    )
    def test_invalid_values_are_reported(self, helpers, name, value, message):
        with helpers.mock_env({name: value}):
            config = Config()
        with pytest.raises(ValueError, match=message):
            config.validate()

    def test_all_errors_are_collected(self, helpers):
        with helpers.mock_env({"HARTOGS_ORACLE_WINDOW": "0", "HARTOGS_MAX_DIMENSION": "0"}):
            config = Config()
        with pytest.raises(ValueError) as excinfo:
            config.validate()
        assert "HARTOGS_ORACLE_WINDOW" in str(excinfo.value)
        assert "HARTOGS_MAX_DIMENSION" in str(excinfo.value)
