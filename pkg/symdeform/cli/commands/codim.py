"""Codimension of the congruence orbit."""

from pathlib import Path
from typing import Optional

import click
from rich.table import Table

from symdeform.blocks import assemble
from symdeform.cli.utils import (
    console,
    emit_json,
    format_option,
    handle_errors,
    print_info,
    resolve_format,
    structure_options,
)
from symdeform.storage import load_structure
from symdeform.tangent import codimension, codimension_table


@click.command()
@structure_options
@format_option
@click.option("--blocks", "by_blocks", is_flag=True, help="Show the blockwise codimension table")
def codim(
    input_path: Optional[Path],
    structure_text: Optional[str],
    output_format: Optional[str],
    by_blocks: bool,
):
    """Print the codimension of the orbit of a canonical pair."""
    with handle_errors("compute codimension"):
        structure = load_structure(input_path, structure_text)
        total = codimension(assemble(structure))
        table = codimension_table(structure) if by_blocks else None

        if resolve_format(output_format) == "json":
            data = {"structure": structure.label, "codim": total}
            if table is not None:
                data["blocks"] = table.to_dict()
            emit_json(data)
            return

        print_info(f"codim {structure.label} = {total}")
        if table is not None:
            grid = Table(title="Blockwise codimension")
            grid.add_column("block")
            grid.add_column("codim", justify="right")
            for i, c in table.diagonal:
                grid.add_row(f"({i},{i}) {structure.blocks[i].label}", str(c))
            for i, j, c in table.offdiagonal:
                grid.add_row(
                    f"({i},{j}) {structure.blocks[i].label} x {structure.blocks[j].label}", str(c)
                )
            grid.add_row("total", str(table.total))
            console.print(grid)
