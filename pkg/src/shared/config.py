"""Runtime configuration for the quintary toolkit.

Settings are read from the environment (optionally populated from a ``.env``
file) every time ``get_settings`` is called, so tests and the CLI can change
them at runtime.
"""

import logging
import os
import sys
from typing import Any, Optional, Tuple

from dotenv import load_dotenv
from pydantic import BaseModel, ConfigDict, Field, field_validator

logger = logging.getLogger(__name__)

DEFAULT_BUDGET = 10_000_000
DEFAULT_SEED = 20110523
DEFAULT_SAMPLES = 10_000
DEFAULT_WINDOW = "0:1000000"
DEFAULT_MAX_SUBSPACES = 4096

_logging_configured = False


def parse_window(value: str) -> Tuple[int, int]:
    """Parse an inclusive ``lo:hi`` window.

    Args:
        value: Text such as ``"0:1000000"``

    Returns:
        The ``(lo, hi)`` pair

    Raises:
        ValueError: If the text is not two integers with lo <= hi
    """
    parts = value.split(":")
    if len(parts) != 2:
        raise ValueError(f"window must look like 'lo:hi', got {value!r}")
    lo, hi = int(parts[0]), int(parts[1])
    if lo > hi:
        raise ValueError(f"window lower bound {lo} exceeds upper bound {hi}")
    return lo, hi


class Settings(BaseModel):
    """Validated runtime settings."""

    model_config = ConfigDict(frozen=True)

    budget: int = Field(default=DEFAULT_BUDGET, ge=1)
    seed: int = DEFAULT_SEED
    samples: int = Field(default=DEFAULT_SAMPLES, ge=1)
    window: Tuple[int, int] = (0, 1_000_000)
    workers: int = Field(default=1, ge=1, le=64)
    max_subspaces: int = Field(default=DEFAULT_MAX_SUBSPACES, ge=1)
    log_level: str = "INFO"

    @field_validator("window", mode="before")
    @classmethod
    def validate_window(cls, v: Any) -> Tuple[int, int]:
        if isinstance(v, str):
            return parse_window(v)
        lo, hi = v
        if lo > hi:
            raise ValueError(f"window lower bound {lo} exceeds upper bound {hi}")
        return (int(lo), int(hi))

    @field_validator("log_level")
    @classmethod
    def validate_log_level(cls, v: str) -> str:
        level = v.upper()
        if not isinstance(logging.getLevelName(level), int):
            raise ValueError(f"unknown log level {v!r}")
        return level


def get_settings(env_file: Optional[str] = None) -> Settings:
    """Get settings, loading fresh from the environment.

    Args:
        env_file: Optional path of a ``.env`` file to load first

    Returns:
        Validated settings
    """
    load_dotenv(env_file, override=False)
    return Settings(
        budget=int(os.getenv("QUINTARY_BUDGET", str(DEFAULT_BUDGET))),
        seed=int(os.getenv("QUINTARY_SEED", str(DEFAULT_SEED))),
        samples=int(os.getenv("QUINTARY_SAMPLES", str(DEFAULT_SAMPLES))),
        window=os.getenv("QUINTARY_WINDOW", DEFAULT_WINDOW),
        workers=int(os.getenv("QUINTARY_WORKERS", "1")),
        max_subspaces=int(
            os.getenv("QUINTARY_MAX_SUBSPACES", str(DEFAULT_MAX_SUBSPACES))
        ),
        log_level=os.getenv("QUINTARY_LOG_LEVEL", "INFO"),
    )


def configure_logging(level: Optional[str] = None) -> None:
    """Configure root logging once; records go to stderr."""
    global _logging_configured
    if _logging_configured:
        if level:
            logging.getLogger().setLevel(level.upper())
        return
    logging.basicConfig(
        level=(level or get_settings().log_level).upper(),
        format="%(asctime)s %(name)s %(levelname)s %(message)s",
        stream=sys.stderr,
    )
    _logging_configured = True
