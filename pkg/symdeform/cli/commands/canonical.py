"""Print the canonical pair of a structure."""

from pathlib import Path
from typing import Optional

import click

from symdeform.blocks import assemble
from symdeform.cli.utils import (
    emit_json,
    format_option,
    handle_errors,
    print_info,
    print_pair,
    resolve_format,
    structure_options,
)
from symdeform.storage import load_structure


@click.command()
@structure_options
@format_option
def canonical(
    input_path: Optional[Path], structure_text: Optional[str], output_format: Optional[str]
):
    """Assemble the canonical pair of a direct sum."""
    with handle_errors("assemble canonical pair"):
        structure = load_structure(input_path, structure_text)
        pair = assemble(structure)

        if resolve_format(output_format) == "json":
            emit_json({"structure": structure.label, "size": pair.size, **pair.to_strings()})
            return

        print_info(f"Canonical pair of {structure.label} (size {pair.size}):")
        print_pair(pair)
