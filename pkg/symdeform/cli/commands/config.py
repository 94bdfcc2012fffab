"""Configuration management commands."""

import re
from typing import Any, Dict, Iterator, Tuple

import click

from symdeform.cli.utils import EXIT_FAILED, fail, print_error, print_info, print_success
from symdeform.config import get_config, set_config


@click.group()
def config():
    """Manage configuration."""
    pass


def _flatten(data: Dict[str, Any], prefix: str = "") -> Iterator[Tuple[str, Any]]:
    for key, value in data.items():
        name = f"{prefix}{key}"
        if isinstance(value, dict):
            yield from _flatten(value, f"{name}.")
        else:
            yield name, value


@config.command()
@click.argument("key")
def get(key: str):
    """Get configuration value."""
    value = get_config().get(key)
    if value is None or isinstance(value, dict):
        fail(f"Configuration key '{key}' not found.", EXIT_FAILED)
    click.echo(value)


@config.command()
@click.argument("key")
@click.argument("value")
def set(key: str, value: str):
    """Set configuration value."""
    try:
        parsed: Any = value
        if value.lower() in ("true", "false"):
            parsed = value.lower() == "true"
        elif re.fullmatch(r"-?[0-9]+", value):
            parsed = int(value)

        set_config(key, parsed, save=True)
        print_success(f"Set {key} = {parsed}")

    except Exception as e:
        fail(f"Failed to set config: {str(e)}", EXIT_FAILED)


@config.command(name="list")
def list_cmd():
    """List all configuration values."""
    try:
        cfg = get_config()
        print_info("Configuration:")
        for key, value in _flatten(cfg.as_dict()):
            click.echo(f"  {key}: {value}")
        if cfg.config_file:
            click.echo(f"  (file: {cfg.config_file})")

    except Exception as e:
        print_error(f"Failed to list config: {str(e)}")


@config.command()
def reset():
    """Reset configuration to defaults."""
    try:
        config_file = get_config().config_file
        if config_file and config_file.exists():
            config_file.unlink()
            get_config.cache_clear()
            print_success("Configuration reset to defaults.")
        else:
            print_info("No configuration file to reset.")

    except Exception as e:
        fail(f"Failed to reset config: {str(e)}", EXIT_FAILED)
