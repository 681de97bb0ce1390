"""
Runtime settings, read from SCHUREXT_* environment variables.
"""
from __future__ import annotations

import contextlib
import os
from collections.abc import Iterator
from typing import Literal

from pydantic import BaseModel, Field

_settings: "Settings | None" = None


class Settings(BaseModel):
    complex_guard: int = Field(default=8, ge=1)
    combinat_guard: int = Field(default=12, ge=1)
    t_max: int = Field(default=32, ge=0)
    u_max: int = Field(default=64, ge=0)
    # realization used for hook Weyl atoms inside complexes
    hook_model: Literal["box", "hook"] = "box"
    log_level: str = "WARNING"


def _from_env() -> Settings:
    env = {
        "complex_guard": os.getenv("SCHUREXT_COMPLEX_GUARD"),
        "combinat_guard": os.getenv("SCHUREXT_COMBINAT_GUARD"),
        "t_max": os.getenv("SCHUREXT_TMAX"),
        "u_max": os.getenv("SCHUREXT_UMAX"),
        "hook_model": os.getenv("SCHUREXT_HOOK_MODEL"),
        "log_level": os.getenv("SCHUREXT_LOG_LEVEL"),
    }
    return Settings(**{k: v for k, v in env.items() if v})


def get_settings() -> Settings:
    """Process-wide settings; environment is read on first use."""
    global _settings
    if _settings is None:
        _settings = _from_env()
    return _settings


@contextlib.contextmanager
def override_settings(**changes) -> Iterator[Settings]:
    """Temporarily replace some settings (CLI --unsafe-degree, tests)."""
    global _settings
    previous = get_settings()
    _settings = previous.model_copy(update=changes)
    try:
        yield _settings
    finally:
        _settings = previous


def reset_settings() -> None:
    """Forget cached settings so the environment is read again."""
    global _settings
    _settings = None
