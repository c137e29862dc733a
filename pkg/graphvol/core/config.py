"""Application configuration using Pydantic Settings."""

from enum import Enum

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict

MIN_TOLERANCE = 1e-14


class LogFormat(str, Enum):
    """Log renderer."""

    CONSOLE = "console"
    JSON = "json"


class Settings(BaseSettings):
    """Settings loaded from ``GRAPHVOL_*`` environment variables."""

    model_config = SettingsConfigDict(
        env_prefix="GRAPHVOL_",
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=False,
        extra="ignore",
    )

    # Application
    app_name: str = Field(default="graphvol")
    log_level: str = Field(default="WARNING")
    log_format: LogFormat = Field(default=LogFormat.CONSOLE)
    log_timestamps: bool = Field(
        default=False,
        description="Stamp log records; off by default so CLI runs are byte-identical",
    )

    # Numerics
    lobachevsky_tol: float = Field(default=1e-13, ge=MIN_TOLERANCE)
    constant_check_tol: float = Field(default=1e-12, gt=0.0)
    angle_sum_tol: float = Field(default=1e-9, gt=0.0)

    # Ball-model geometry
    surface_membership_tol: float = Field(default=1e-10, gt=0.0)
    geodesic_orthogonality_tol: float = Field(default=1e-9, gt=0.0)
    ball_tol: float = Field(default=1e-12, ge=0.0)

    # Free groups
    default_alphabet: str = Field(default="xyz", min_length=1)

    # Output
    significant_digits: int = Field(default=15, ge=1, le=17)


# Global settings instance
settings = Settings()
