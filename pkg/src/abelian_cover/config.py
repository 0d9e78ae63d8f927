import os

from dotenv import load_dotenv
from pydantic import BaseModel, Field, field_validator

load_dotenv()


class ChartConfig(BaseModel):
    """Configuration for the affine chart search."""

    search_bound: int = Field(
        default=7, ge=1, description="Largest coefficient tried for the infinity line"
    )
    seed: int = Field(
        default=0, ge=0, description="Index of the valid infinity line to use"
    )


class ExecutionConfig(BaseModel):
    """Configuration for evaluating independent subproblems."""

    max_workers: int = Field(
        default=1, ge=1, description="Thread pool size for eigenspaces and candidates"
    )


class ReportConfig(BaseModel):
    """Configuration for report output."""

    output_format: str = Field(default="txt", description="Output format")
    verbose: bool = Field(default=False, description="Print progress to stderr")

    @field_validator("output_format")
    @classmethod
    def validate_output_format(cls, v: str) -> str:
        if v not in ["json", "txt"]:
            raise ValueError("Output format must be 'json' or 'txt'")
        return v


class NumerologyConfig(BaseModel):
    """Parameters for the closed-form invariants."""

    k_squared: int | None = Field(
        default=None, description="K^2 of the seed surface; defaults to the computed value"
    )
    m_values: list[int] = Field(default_factory=lambda: [5], description="Multiples of K")
    dimension: int = Field(default=2, ge=2, description="Complex dimension of products")
    factors: tuple[int, int] | None = Field(
        default=None, description="Copies of the two seed surfaces in a product"
    )

    @field_validator("m_values")
    @classmethod
    def validate_m_values(cls, v: list[int]) -> list[int]:
        if not v or any(m < 5 for m in v):
            raise ValueError("Multiples of K must be at least 5")
        return v


class ToolkitConfig(BaseModel):
    """Main toolkit configuration."""

    chart: ChartConfig = Field(default_factory=ChartConfig)
    execution: ExecutionConfig = Field(default_factory=ExecutionConfig)
    report: ReportConfig = Field(default_factory=ReportConfig)
    numerology: NumerologyConfig = Field(default_factory=NumerologyConfig)

    @classmethod
    def from_env(cls) -> "ToolkitConfig":
        """Load configuration from environment variables."""
        return cls(
            chart=ChartConfig(
                search_bound=int(os.getenv("CHART_SEARCH_BOUND", "7")),
                seed=int(os.getenv("CHART_SEED", "0")),
            ),
            execution=ExecutionConfig(
                max_workers=int(os.getenv("COVER_MAX_WORKERS", "1")),
            ),
            report=ReportConfig(
                output_format=os.getenv("OUTPUT_FORMAT", "txt"),
                verbose=os.getenv("COVER_VERBOSE", "").strip().lower()
                in {"1", "true", "yes"},
            ),
        )
