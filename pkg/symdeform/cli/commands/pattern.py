"""Print the miniversal pattern of a structure."""

from pathlib import Path
from typing import Dict, Optional, Tuple

import click

from symdeform.cli.utils import (
    emit_json,
    format_option,
    handle_errors,
    print_pattern,
    resolve_format,
    structure_options,
)
from symdeform.errors import InputError
from symdeform.patterns.pattern import pattern_to_json
from symdeform.patterns.catalog import assemble_pattern
from symdeform.storage import load_structure


def parse_variants(items: Tuple[str, ...]) -> Dict[str, Optional[str]]:
    """``("nw_single=first_row",)`` -> ``{"nw_single": "first_row"}``."""
    variants: Dict[str, Optional[str]] = {}
    for item in items:
        key, sep, value = item.partition("=")
        if not sep or key.strip() not in ("nw_single", "righthalfcap"):
            raise InputError(f"Bad variant {item!r}; expected nw_single=NAME or righthalfcap=NAME")
        variants[key.strip()] = value.strip()
    return variants


variant_option = click.option(
    "--variant",
    "variant_items",
    multiple=True,
    help="Catalog variant override, e.g. nw_single=first_row (repeatable)",
)


@click.command()
@structure_options
@format_option
@variant_option
def pattern(
    input_path: Optional[Path],
    structure_text: Optional[str],
    output_format: Optional[str],
    variant_items: Tuple[str, ...],
):
    """Print the (0,*) pattern and its parameter count."""
    with handle_errors("build pattern"):
        structure = load_structure(input_path, structure_text)
        p = assemble_pattern(structure, parse_variants(variant_items))

        if resolve_format(output_format) == "json":
            emit_json(pattern_to_json(p))
            return

        print_pattern(p, title=f"Pattern of {structure.label}")
