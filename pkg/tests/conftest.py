"""Shared pytest fixtures.

Settings are cached process-wide; every test starts from the defaults with
no SCHUREXT_* variables leaking in from the environment.
"""
import pytest

from schurext import config

ENV_VARS = (
    "SCHUREXT_COMPLEX_GUARD",
    "SCHUREXT_COMBINAT_GUARD",
    "SCHUREXT_TMAX",
    "SCHUREXT_UMAX",
    "SCHUREXT_HOOK_MODEL",
    "SCHUREXT_LOG_LEVEL",
)


@pytest.fixture(autouse=True)
def reset_settings(monkeypatch):
    for name in ENV_VARS:
        monkeypatch.delenv(name, raising=False)
    config.reset_settings()
    try:
        yield config.get_settings()
    finally:
        config.reset_settings()


@pytest.fixture(params=["box", "hook"])
def hook_model(request):
    """Run a test under both realizations of hook Weyl functors."""
    with config.override_settings(hook_model=request.param):
        yield request.param
