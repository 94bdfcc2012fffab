"""
Main CLI entry point.
"""

from typing import Optional

import click

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
from symdeform.log import configure_logging


@click.group()
@click.version_option(package_name="symdeform")
@click.option(
    "--log-level",
    type=click.Choice(["DEBUG", "INFO", "WARNING", "ERROR"], case_sensitive=False),
    help="Log level (default from config)",
)
def main(log_level: Optional[str]):
    """symdeform: miniversal deformations of symmetric matrix pairs."""
    configure_logging(log_level)


# Register commands
main.add_command(canonical.canonical)
main.add_command(pattern.pattern)
main.add_command(codim.codim)
main.add_command(verify.verify)
main.add_command(sweep.sweep)
main.add_command(construct.construct)
main.add_command(project.project)
main.add_command(config.config)


if __name__ == "__main__":
    main()
