"""Verify miniversality of a pattern."""

import json
from pathlib import Path
from typing import Any, Dict, List, Optional, Tuple

import click

from symdeform.blocks import assemble
from symdeform.cli.commands.pattern import parse_variants, variant_option
from symdeform.cli.utils import (
    EXIT_FAILED,
    certificate_table,
    console,
    emit_json,
    format_option,
    handle_errors,
    print_error,
    print_success,
    print_warning,
    resolve_format,
    structure_options,
)
from symdeform.errors import ParseError
from symdeform.ledger import resolve_pattern
from symdeform.patterns.pattern import pattern_from_json
from symdeform.patterns.catalog import assemble_pattern
from symdeform.storage import load_structure
from symdeform.tangent import is_miniversal, verify_blockwise


def _read_pattern(path: Path):
    try:
        with open(path, "r", encoding="utf-8") as f:
            return pattern_from_json(json.load(f))
    except json.JSONDecodeError as e:
        raise ParseError(
            f"Invalid JSON in {path}: {e.msg}", position=f"line {e.lineno} column {e.colno}"
        ) from e


@click.command()
@structure_options
@format_option
@variant_option
@click.option(
    "--pattern",
    "pattern_path",
    type=click.Path(dir_okay=False, path_type=Path),
    help="Pattern JSON to check instead of the catalog pattern",
)
def verify(
    input_path: Optional[Path],
    structure_text: Optional[str],
    output_format: Optional[str],
    variant_items: Tuple[str, ...],
    pattern_path: Optional[Path],
):
    """Certify that a pattern complements the tangent space."""
    with handle_errors("verify pattern"):
        structure = load_structure(input_path, structure_text)
        variants = parse_variants(variant_items)
        if pattern_path is not None:
            p = _read_pattern(pattern_path)
            ledger: List[Dict[str, Any]] = []
        else:
            p = assemble_pattern(structure, variants)
            ledger = [entry.to_dict() for entry in resolve_pattern(structure, variants).ledger]

        certificate = is_miniversal(assemble(structure), p)
        blockwise = verify_blockwise(structure, p)
        passed = certificate.miniversal and blockwise.passed and not ledger

        if resolve_format(output_format) == "json":
            emit_json(
                {
                    "structure": structure.label,
                    "passed": passed,
                    "codim": certificate.codimension,
                    "tangent_rank": certificate.tangent_rank,
                    "pattern_params": certificate.params,
                    "direct_sum": certificate.miniversal,
                    "dimension": certificate.dimension,
                    "combined_rank": certificate.combined_rank,
                    "blockwise": blockwise.to_dict(),
                    "ledger": ledger,
                }
            )
        else:
            console.print(
                certificate_table(certificate.to_dict(), f"Certificate for {structure.label}")
            )
            for block in blockwise.failures():
                print_warning(
                    f"block ({block.i},{block.j}): {block.certificate.params} params, "
                    f"codim {block.certificate.codimension}"
                )
            for entry in ledger:
                print_warning(f"ledger: {entry}")
            if passed:
                print_success(f"{structure.label}: miniversal, {certificate.params} parameters")
            else:
                print_error(f"{structure.label}: not miniversal")

    if not passed:
        raise SystemExit(EXIT_FAILED)
