# config.py
"""
Global configuration for framekit.

Usage (preferred):
    import config as cfg
    s = cfg.settings
    print(s.validation_tol)

Override via env vars (prefix FRAMEKIT_, case-insensitive), e.g.:
  FRAMEKIT_SEED=7
  FRAMEKIT_LOG_LEVEL=debug
  FRAMEKIT_VALIDATION_TOL=1e-9
  FRAMEKIT_DELETION_ENUM_CAP=10
  FRAMEKIT_C0_RESOLUTION=9
"""
from __future__ import annotations

from typing import Literal
from pydantic import field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict

LogLevel = Literal["debug", "info", "warning", "error", "critical"]


class Settings(BaseSettings):
    # ---- Sampling ----
    # Seed for every sampled quantity (operator norms, minimality, c0 face search)
    seed: int = 0
    sample_trials: int = 1000

    # Logging
    log_level: LogLevel = "info"

    # ---- Numerical tolerances ----
    validation_tol: float = 1e-10
    # Singular value cutoff: sigma_max * max(shape) * rank_rel_tol
    rank_rel_tol: float = 2.0 ** -40
    # |a_i| <= support_tol * max|a| counts as outside the support
    support_tol: float = 1e-12
    parseval_tol: float = 1e-10
    frame_bound_tol: float = 1e-12

    # ---- Search limits ----
    deletion_enum_cap: int = 12
    c0_block_cap: int = 20
    c0_resolution: int = 5
    # Max grid points scanned per cube face before switching to random grid nodes
    c0_grid_cap: int = 4096

    # ---- Reports ----
    report_indent: int = 2

    model_config = SettingsConfigDict(
        env_prefix="FRAMEKIT_",
        case_sensitive=False,
        extra="ignore",
    )

    @field_validator("log_level", mode="before")
    @classmethod
    def _validate_log_level(cls, v: str) -> LogLevel:
        vv = str(v).lower().strip()
        return vv if vv in {"debug", "info", "warning", "error", "critical"} else "info"  # type: ignore[return-value]

    @field_validator(
        "validation_tol",
        "rank_rel_tol",
        "support_tol",
        "parseval_tol",
        "frame_bound_tol",
    )
    @classmethod
    def _validate_tolerance(cls, v: float) -> float:
        if v < 0:
            raise ValueError(f"tolerances must be nonnegative; got {v}")
        return v

    @field_validator("deletion_enum_cap", "c0_block_cap", "c0_resolution", "sample_trials")
    @classmethod
    def _validate_positive(cls, v: int) -> int:
        if v < 1:
            raise ValueError(f"expected a positive integer; got {v}")
        return v


# Single global instance
settings = Settings()
