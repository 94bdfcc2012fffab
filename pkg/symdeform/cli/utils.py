"""CLI utility functions."""

import json
import sys
from contextlib import contextmanager
from pathlib import Path
from typing import Any, Callable, Dict, Iterator, NoReturn, Optional

import click
from rich import print as rprint
from rich.console import Console
from rich.table import Table

from symdeform.config import get_config
from symdeform.errors import InputError, InvariantError, SymDeformError
from symdeform.exact.pair import SymPair
from symdeform.patterns.pattern import PatternPair

console = Console()

EXIT_FAILED = 1
EXIT_INPUT = 2

# Use ASCII fallbacks on terminals that can't handle Unicode symbols
_can_unicode = sys.stdout.encoding and sys.stdout.encoding.lower().startswith("utf")
_SYM_SUCCESS = "✓" if _can_unicode else "[ok]"
_SYM_ERROR = "✗" if _can_unicode else "[error]"
_SYM_INFO = "ℹ" if _can_unicode else "[info]"
_SYM_WARNING = "⚠" if _can_unicode else "[warn]"


def print_success(message: str):
    """Print success message."""
    rprint(f"[green]{_SYM_SUCCESS}[/green] {message}")


def print_error(message: str):
    """Print error message."""
    rprint(f"[red]{_SYM_ERROR}[/red] {message}")


def print_info(message: str):
    """Print info message."""
    rprint(f"[blue]{_SYM_INFO}[/blue] {message}")


def print_warning(message: str):
    """Print warning message."""
    rprint(f"[yellow]{_SYM_WARNING}[/yellow] {message}")


def fail(message: str, code: int = EXIT_FAILED) -> NoReturn:
    print_error(message)
    sys.exit(code)


@contextmanager
def handle_errors(action: str) -> Iterator[None]:
    """Print library errors and exit: 2 for bad input, 1 for anything else."""
    try:
        yield
    except (InputError, InvariantError, OSError) as e:
        fail(f"Failed to {action}: {str(e)}", EXIT_INPUT)
    except SymDeformError as e:
        fail(f"Failed to {action}: {str(e)}", EXIT_FAILED)


def structure_options(func: Callable) -> Callable:
    """Add ``--input`` and ``--structure``."""
    func = click.option(
        "--structure",
        "structure_text",
        help="Inline structure, e.g. 'H(2,1/2),K(1),L(0)'",
    )(func)
    func = click.option(
        "--input",
        "input_path",
        type=click.Path(dir_okay=False, path_type=Path),
        help="Structure file (JSON or YAML)",
    )(func)
    return func


def format_option(func: Callable) -> Callable:
    return click.option(
        "--format",
        "output_format",
        type=click.Choice(["text", "json"]),
        default=None,
        help="Output format (default from config)",
    )(func)


def resolve_format(output_format: Optional[str]) -> str:
    if output_format:
        return output_format
    value = get_config().get("format", "text")
    return value if value in ("text", "json") else "text"


def option_or_config(value: Any, key: str, kind: Callable[[Any], Any]) -> Any:
    """The CLI value when given, else the configured ``key`` converted with ``kind``."""
    if value is not None:
        return value
    raw = get_config().get(key)
    try:
        if raw is None or (kind is int and isinstance(raw, bool)):
            raise TypeError(raw)
        return kind(raw)
    except (TypeError, ValueError) as e:
        raise InputError(
            f"Configuration value {key} = {raw!r} is not a valid {kind.__name__}"
        ) from e


def emit_json(data: Dict[str, Any]):
    click.echo(json.dumps(data, indent=2))


def print_pair(pair: SymPair):
    for tag, m in (("A", pair.a), ("B", pair.b)):
        click.echo(f"{tag} =")
        for row in m.to_strings():
            click.echo("  " + " ".join(f"{v:>6}" for v in row))


def print_pattern(pattern: PatternPair, title: str = "Pattern"):
    print_info(f"{title} ({len(pattern.params)} parameters):")
    for tag, mask in zip(("A", "B"), pattern.masks()):
        click.echo(f"  mask {tag}:")
        for line in mask.to_ascii().splitlines():
            click.echo(f"    {line}")


def certificate_table(rows: Dict[str, Any], title: str) -> Table:
    table = Table(title=title)
    table.add_column("quantity")
    table.add_column("value", justify="right")
    for key, value in rows.items():
        table.add_row(key, str(value))
    return table
