"""Greedy construction of a minimal pattern."""

from pathlib import Path
from typing import Optional

import click

from symdeform.blocks import assemble
from symdeform.cli.utils import (
    EXIT_FAILED,
    emit_json,
    format_option,
    handle_errors,
    print_error,
    print_pattern,
    print_success,
    resolve_format,
    structure_options,
)
from symdeform.patterns.pattern import count_parameters, pattern_to_json
from symdeform.patterns.catalog import assemble_pattern
from symdeform.storage import load_structure
from symdeform.tangent import ORDERS, codimension, greedy_minimal_pattern, is_miniversal


@click.command()
@structure_options
@format_option
@click.option(
    "--order",
    type=click.Choice(list(ORDERS)),
    default="vectorized",
    show_default=True,
    help="Order in which unit pairs are scanned",
)
def construct(
    input_path: Optional[Path],
    structure_text: Optional[str],
    output_format: Optional[str],
    order: str,
):
    """Build a pattern greedily and compare it with the catalog pattern."""
    with handle_errors("construct pattern"):
        structure = load_structure(input_path, structure_text)
        k = assemble(structure)
        greedy = greedy_minimal_pattern(k, order)
        catalog = assemble_pattern(structure)
        codim = codimension(k)
        passed = (
            is_miniversal(k, greedy).miniversal
            and count_parameters(greedy) == codim == count_parameters(catalog)
        )

        if resolve_format(output_format) == "json":
            emit_json(
                {
                    "structure": structure.label,
                    "order": order,
                    "codim": codim,
                    "passed": passed,
                    "greedy": pattern_to_json(greedy),
                    "catalog": pattern_to_json(catalog),
                }
            )
        else:
            print_pattern(greedy, title=f"Greedy pattern ({order})")
            print_pattern(catalog, title="Catalog pattern")
            if passed:
                print_success(f"Both patterns have {codim} parameters")
            else:
                print_error(
                    f"Parameter counts differ: greedy {count_parameters(greedy)}, "
                    f"catalog {count_parameters(catalog)}, codim {codim}"
                )

    if not passed:
        raise SystemExit(EXIT_FAILED)
