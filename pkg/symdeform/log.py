"""Logging setup backed by rich."""

import logging
from typing import Optional, Union

from rich.console import Console
from rich.logging import RichHandler

_HANDLER_NAME = "symdeform-rich"


def configure_logging(level: Optional[Union[str, int]] = None) -> logging.Logger:
    """
    Attach a RichHandler (stderr) to the package logger.

    Safe to call repeatedly; the handler is installed once and only the level
    is updated afterwards.

    Args:
        level: Level name or number. Defaults to the configured ``log_level``.

    Returns:
        The ``symdeform`` logger
    """
    if level is None:
        from symdeform.config import get_config

        level = get_config().get("log_level", "WARNING")
    if isinstance(level, str):
        level = logging.getLevelName(level.upper())
        if not isinstance(level, int):
            level = logging.WARNING

    logger = logging.getLogger("symdeform")
    if not any(getattr(h, "name", None) == _HANDLER_NAME for h in logger.handlers):
        handler = RichHandler(
            console=Console(stderr=True),
            show_path=False,
            rich_tracebacks=False,
        )
        handler.name = _HANDLER_NAME
        handler.setFormatter(logging.Formatter("%(name)s: %(message)s"))
        logger.addHandler(handler)
        logger.propagate = False
    logger.setLevel(level)
    return logger
