"""
Runtime configuration, read from ``GEOLINE_*`` environment variables or a
``.env`` file in the working directory.
"""

from __future__ import annotations

from functools import lru_cache
from pathlib import Path

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    model_config = SettingsConfigDict(env_prefix="GEOLINE_", env_file=".env", extra="ignore")

    # Domain
    margin: float = Field(0.05, gt=0, lt=1)
    h_max: float = Field(0.1, gt=0)

    # Series
    order: int = Field(8, ge=0)
    warn_ratio: float = Field(1e-3, gt=0)

    # Quadrature oracle
    quad_abs_tol: float = Field(1e-13, gt=0)
    quad_rel_tol: float = Field(1e-12, gt=0)
    quad_limit: int = Field(200, ge=1)

    # Inverse solver
    newton_tol: float = Field(1e-13, gt=0)
    newton_max_iter: int = Field(50, ge=1)
    monotone_samples: int = Field(5, ge=2)

    # Profile sweep defaults (comma separated)
    profile_c: str = "0.1,0.5,0.9"
    profile_k: str = "0,1,2"

    # Run journal; disabled when unset
    journal_path: Path | None = None


@lru_cache(maxsize=None)
def get_settings() -> Settings:
    """Return the process-wide settings (cached after first use)."""
    return Settings()
