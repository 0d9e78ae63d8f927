import pytest
from abelian_cover.config import NumerologyConfig, ReportConfig, ToolkitConfig
from pydantic import ValidationError


class TestConfig:
    """Test configuration sections and environment loading."""

    def test_defaults(self):
        """Test default values."""
        config = ToolkitConfig()
        assert config.chart.search_bound == 7
        assert config.chart.seed == 0
        assert config.execution.max_workers == 1
        assert config.report.output_format == "txt"
        assert config.numerology.m_values == [5]

    def test_from_env(self, monkeypatch):
        """Test that environment variables override defaults."""
        monkeypatch.setenv("CHART_SEARCH_BOUND", "5")
        monkeypatch.setenv("CHART_SEED", "2")
        monkeypatch.setenv("COVER_MAX_WORKERS", "3")
        monkeypatch.setenv("OUTPUT_FORMAT", "json")
        monkeypatch.setenv("COVER_VERBOSE", "true")
        config = ToolkitConfig.from_env()
        assert config.chart.search_bound == 5
        assert config.chart.seed == 2
        assert config.execution.max_workers == 3
        assert config.report.output_format == "json"
        assert config.report.verbose is True

    def test_invalid_output_format(self):
        """Test output format validation."""
        with pytest.raises(ValidationError):
            ReportConfig(output_format="srt")

    def test_invalid_multiples(self):
        """Test that multiples of K below 5 are rejected."""
        with pytest.raises(ValidationError):
            NumerologyConfig(m_values=[4])
        with pytest.raises(ValidationError):
            NumerologyConfig(m_values=[])
        with pytest.raises(ValidationError):
            NumerologyConfig(dimension=1)
