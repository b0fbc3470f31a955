"""Application configuration."""

from typing import Literal

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Run defaults loaded from environment variables prefixed with ``QH_``."""

    model_config = SettingsConfigDict(
        env_prefix="QH_",
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=False,
        extra="ignore",
    )

    # Environment
    environment: Literal["development", "production"] = "development"

    log_level: Literal["DEBUG", "INFO", "WARNING", "ERROR"] = "INFO"
    """Minimum level emitted by the structured logger."""

    # Deformation
    q: float = Field(default=0.5, gt=0.0, lt=1.0)
    """Deformation parameter, strictly inside (0, 1)."""

    m: int = Field(default=3, ge=1)
    """Dimension of the quantum Euclidean space."""

    # Series policy
    rel_tol: float = Field(default=1e-10, gt=0.0)
    """Relative tolerance used by the CLI and the verification suites."""

    max_terms: int = Field(default=500, ge=1)
    """Hard cap on the number of series terms before a truncation error."""

    consecutive_small: int = Field(default=3, ge=1)
    """Number of successive negligible terms that ends a series."""

    # Quadrature and randomized checks
    gamma: float = Field(default=1.0, gt=0.0)
    """Anchor of the infinite Jackson grid."""

    seed: int = 42
    """Seed for randomized property checks."""

    l_expand: int = Field(default=40, ge=2)
    """Number of terms used when a q-Gaussian is expanded into a power series."""

    # Output
    output_format: Literal["csv", "json"] = "json"
    """Format of CLI tables and reports."""


# Global settings instance
settings = Settings()


def get_settings() -> Settings:
    """Get application settings.

    Returns:
        The module-level Settings instance.
    """
    return settings
