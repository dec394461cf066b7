"""Runtime settings from ``.env``, ``ZDM_*`` environment variables and CLI flags.

Explicit arguments win over the environment, which wins over the defaults.
"""

from __future__ import annotations

import logging
import os
from pathlib import Path
from typing import Any

from dotenv import load_dotenv
from pydantic import BaseModel, Field, ValidationError, field_validator

from .errors import InvalidArgumentError
from .numerics.zeta import EvalConfig
from .precision import MIN_PRECISION_BITS

logger = logging.getLogger(__name__)

ENV_PREFIX = "ZDM_"
LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")


class Settings(BaseModel):
    """Knobs shared by the CLI and long empirical runs."""

    precision_bits: int = Field(
        default=128,
        ge=MIN_PRECISION_BITS,
        description="Working precision in bits (env ZDM_PRECISION_BITS)",
    )
    workers: int = Field(
        default=1, ge=1, description="Worker processes for per-zero work (env ZDM_WORKERS)"
    )
    cache_dir: Path | None = Field(
        default=None,
        description="Directory for the derivative cache; unset disables it "
        "(env ZDM_CACHE_DIR)",
    )
    zeros_file: Path | None = Field(
        default=None,
        description="Zero table to use instead of the bundled one (env ZDM_ZEROS_FILE)",
    )
    checkpoints_every: int = Field(
        default=250,
        ge=1,
        description="Zeros between comparison checkpoints (env ZDM_CHECKPOINTS_EVERY)",
    )
    log_level: str = Field(
        default="WARNING", description="Root log level (env ZDM_LOG_LEVEL)"
    )

    @field_validator("log_level")
    @classmethod
    def _known_level(cls, value: str) -> str:
        level = value.upper()
        if level not in LOG_LEVELS:
            raise ValueError(f"log level must be one of {', '.join(LOG_LEVELS)}")
        return level

    def eval_config(self) -> EvalConfig:
        return EvalConfig(precision_bits=self.precision_bits)


def _from_environment() -> dict[str, Any]:
    values: dict[str, Any] = {}
    for name in Settings.model_fields:
        raw = os.environ.get(f"{ENV_PREFIX}{name.upper()}")
        if raw is not None and raw.strip():
            values[name] = raw.strip()
    return values


def load_settings(env_file: Path | None = None, **overrides: Any) -> Settings:
    """Build ``Settings``; ``None`` overrides leave the environment value in place."""
    env_path = env_file or Path.cwd() / ".env"
    if env_path.exists():
        load_dotenv(env_path)
        logger.debug("[load_settings] loaded %s", env_path)
    values = _from_environment()
    values.update({k: v for k, v in overrides.items() if v is not None})
    try:
        return Settings(**values)
    except ValidationError as exc:
        problems = "; ".join(
            f"{ENV_PREFIX}{'.'.join(str(p) for p in err['loc']).upper()}: {err['msg']}"
            for err in exc.errors()
        )
        raise InvalidArgumentError(f"invalid settings: {problems}") from exc
