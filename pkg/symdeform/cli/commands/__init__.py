"""CLI commands."""

from symdeform.cli.commands import (
    canonical,
    codim,
    config,
    construct,
    pattern,
    project,
    sweep,
    verify,
)

__all__ = ["canonical", "pattern", "codim", "verify", "sweep", "construct", "project", "config"]
