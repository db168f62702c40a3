"""Configuration management for the face-numbers toolkit.

Loads and validates environment variables using Pydantic Settings.
"""

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Toolkit settings loaded from environment variables.

    Environment variables are loaded from .env file or system environment.
    All fields are validated at import time.
    """

    # Field defaults
    default_field: str = Field(
        default="2",
        description="Coefficient field used when none is given (\"p\" or \"p^m\")"
    )
    default_seed: int = Field(
        default=0,
        ge=0,
        description="Seed for random linear forms when none is given"
    )
    field_search_seed: int = Field(
        default=0,
        ge=0,
        description="Seed of the search for an irreducible modulus of GF(p^m)"
    )
    max_prime: int = Field(
        default=2_147_483_647,
        description="Largest prime accepted for prime fields (int64 products must not overflow)"
    )
    max_extension_field_size: int = Field(
        default=1 << 20,
        description="Largest p^m (m > 1) for which exp/log tables are built"
    )

    # Face ring genericity
    genericity_retries: int = Field(
        default=8,
        ge=1,
        description="Redraws of random linear forms before giving up"
    )
    min_generic_field_size: int = Field(
        default=65536,
        description="Smallest field accepted by face-ring operations"
    )

    # Numerical tolerances (only pseudopowers are real-valued)
    pseudopower_tolerance: float = Field(
        default=1e-9,
        gt=0,
        description="Bisection tolerance for non-integral pseudopowers"
    )
    inequality_guard_band: float = Field(
        default=1e-6,
        ge=0,
        description="Slack tolerance for bounds involving a real pseudopower"
    )

    # Generators
    validation_field: str = Field(
        default="2",
        description="Field used to validate generated complexes"
    )

    # Logging
    timing_log_threshold_ms: float = Field(
        default=250.0,
        ge=0,
        description="Operations faster than this are not logged by timing()"
    )

    # Catalog flow
    catalog_max_workers: int = Field(
        default=4,
        ge=1,
        description="Concurrency of the catalog verification flow"
    )
    catalog_check_kinds: str = Field(
        default="manifold,ds,bounds",
        description="Comma-separated check kinds run per fixture by the catalog flow"
    )

    # CLI
    report_format: str = Field(
        default="json",
        pattern="^(json|text)$",
        description="Default CLI output format"
    )

    model_config = SettingsConfigDict(
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=False,
        extra="ignore"
    )


# Global settings instance - loaded once at import time
settings = Settings()
