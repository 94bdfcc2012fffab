"""Shared fixtures."""

import logging

import pytest

from symdeform.config import _ENV_OVERRIDES, get_config


@pytest.fixture(autouse=True)
def isolated_config(tmp_path, monkeypatch):
    """Run every test with an empty home, a clean cwd and no SYMDEFORM_* variables."""
    home = tmp_path / "home"
    home.mkdir()
    work = tmp_path / "work"
    work.mkdir()
    monkeypatch.setenv("HOME", str(home))
    monkeypatch.chdir(work)
    for var in _ENV_OVERRIDES:
        # set-then-delete so values loaded from a .env file are undone afterwards
        monkeypatch.setenv(var, "")
        monkeypatch.delenv(var)
    get_config.cache_clear()
    yield work
    get_config.cache_clear()
    logger = logging.getLogger("symdeform")
    for handler in list(logger.handlers):
        logger.removeHandler(handler)
    logger.propagate = True
    logger.setLevel(logging.NOTSET)
