"""
Configuration Management

Pydantic-settings based configuration for the convexity toolkit.
All settings can be overridden via environment variables.
"""

from functools import lru_cache
from pathlib import Path
from typing import Literal

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict

# Solver-facing graphs are held as bit masks; beyond this the exact solvers refuse.
REPRESENTATION_MAX_N = 64


class Settings(BaseSettings):
    """
    Application settings loaded from environment variables.

    Environment variables are prefixed with CXH_ and are case-insensitive.
    Example: CXH_TIME_LIMIT=30
    """

    model_config = SettingsConfigDict(
        env_prefix="CXH_",
        env_file=[".env.local", ".env"],  # Try .env.local first
        env_file_encoding="utf-8",
        case_sensitive=False,
        extra="ignore",
    )

    # Search budget
    time_limit: float = Field(
        default=120.0,
        gt=0,
        description="Wall-clock seconds allowed for a single exact search",
    )
    max_subsets: int = Field(
        default=20_000_000,
        gt=0,
        description="Maximum number of candidate sets an exact search may test",
    )
    exact_max_n: int = Field(
        default=22,
        gt=0,
        le=REPRESENTATION_MAX_N,
        description="Default vertex cap for exact hull-number search",
    )
    representation_max_n: int = Field(
        default=REPRESENTATION_MAX_N,
        gt=0,
        le=REPRESENTATION_MAX_N,
        description="Hard vertex cap for solver-facing graphs",
    )

    # Logging
    log_level: Literal["DEBUG", "INFO", "WARNING", "ERROR"] = Field(
        default="WARNING",
        description="Logging level",
    )
    log_format: Literal["console", "json"] = Field(
        default="console",
        description="Renderer used for structured log lines",
    )

    # Verification harness
    parallelism: int = Field(
        default=1,
        ge=1,
        description="Worker processes used by the verification suite",
    )
    default_seed: int = Field(
        default=42,
        ge=0,
        description="Seed used when the CLI is not given one",
    )
    verify_max_order: int = Field(
        default=4,
        ge=2,
        le=7,
        description="Default factor order cap for theorem checks",
    )
    contracts_dir: Path | None = Field(
        default=None,
        description="Directory holding the JSON schemas (defaults to the packaged convexity/contracts/)",
    )

    @property
    def schema_dir(self) -> Path:
        """Directory the JSON schemas are read from."""
        if self.contracts_dir is not None:
            return self.contracts_dir
        return Path(__file__).resolve().parents[1] / "contracts"


@lru_cache(maxsize=1)
def get_settings() -> Settings:
    """
    Get cached application settings.

    Uses lru_cache to ensure settings are loaded only once.
    Call get_settings.cache_clear() in tests after changing the environment.
    """
    return Settings()
