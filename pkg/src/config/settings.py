"""
Application Configuration Management.

This module uses `pydantic-settings` to manage the toolkit's configuration.
Settings are loaded from environment variables and a `.env` file. Nothing is
required; command-line flags override every value here.
"""
from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """
    Defines the toolkit's configuration settings.

    Attributes:
        LOG_LEVEL: The logging level (e.g., "WARNING", "DEBUG"). DEBUG
            shows one line per property trial.
        SYM_TOL: Default slack for symmetry and Hermiticity checks.
        PSD_TOL: Default eigenvalue slack for semidefiniteness.
        EQ_TOL: Default slack for matrix equalities.
        DEFAULT_SEED: Seed of `propcheck` when `--seed` is not given.
        DEFAULT_TRIALS: Trial count of `propcheck` without `--trials`.
        PATH_STEPS: Steps of the discretized paths used by the suites.
        SUITE_WORKERS: Threads used by `propcheck` without `--workers`.
        SUITE_SAMPLES_PER_MAP: Points sampled per matrix by action suites.
    """

    # Logging settings
    LOG_LEVEL: str = "WARNING"

    # Numerical tolerances
    SYM_TOL: float = Field(default=1e-9, gt=0.0)
    PSD_TOL: float = Field(default=1e-9, gt=0.0)
    EQ_TOL: float = Field(default=1e-9, gt=0.0)

    # Property suites
    DEFAULT_SEED: int = Field(default=0, ge=0)
    DEFAULT_TRIALS: int = Field(default=1000, ge=1)
    PATH_STEPS: int = Field(default=512, ge=1)
    SUITE_WORKERS: int = Field(default=1, ge=1)
    SUITE_SAMPLES_PER_MAP: int = Field(default=8, ge=1)

    model_config = SettingsConfigDict(
        env_file=".env",
        env_file_encoding="utf-8",
        extra="ignore",
    )


settings = Settings()
