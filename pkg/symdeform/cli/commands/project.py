"""Project perturbations onto the miniversal slice."""

from pathlib import Path
from typing import Optional

import click

from symdeform.blocks import assemble
from symdeform.cli.utils import (
    EXIT_FAILED,
    certificate_table,
    console,
    emit_json,
    format_option,
    handle_errors,
    option_or_config,
    print_error,
    print_info,
    print_success,
    resolve_format,
    structure_options,
)
from symdeform.ledger import resolve_pattern
from symdeform.patterns.pattern import param_label
from symdeform.slice import check_projections, project_to_slice
from symdeform.storage import load_perturbation, load_structure


@click.command()
@structure_options
@format_option
@click.option(
    "--perturbation",
    "perturbation_path",
    type=click.Path(dir_okay=False, path_type=Path),
    help="Perturbation JSON {\"a\": [[...]], \"b\": [[...]]}",
)
@click.option("--samples", type=int, help="Random perturbations to check when no file is given")
@click.option("--seed", type=int, help="Seed for random perturbations")
def project(
    input_path: Optional[Path],
    structure_text: Optional[str],
    output_format: Optional[str],
    perturbation_path: Optional[Path],
    samples: Optional[int],
    seed: Optional[int],
):
    """Reduce a perturbation to pattern form, or run seeded projection checks."""
    fmt = resolve_format(output_format)
    with handle_errors("project perturbation"):
        structure = load_structure(input_path, structure_text)
        k = assemble(structure)
        p = resolve_pattern(structure).pattern

        if perturbation_path is not None:
            projection = project_to_slice(k, load_perturbation(perturbation_path), p)
            passed = projection.residual_check
            if fmt == "json":
                data = projection.to_dict()
                data["labels"] = {
                    str(pid): param_label(p, pid) for pid in sorted(projection.d_values)
                }
                emit_json({"structure": structure.label, "passed": passed, **data})
            else:
                print_info(f"Slice coordinates for {structure.label}:")
                for pid, value in sorted(projection.d_values.items()):
                    click.echo(f"  {param_label(p, pid)} = {value}")
                click.echo("C =")
                for row in projection.reducer.to_strings():
                    click.echo("  " + " ".join(f"{v:>6}" for v in row))
        else:
            samples = option_or_config(samples, "projection.samples", int)
            seed = option_or_config(seed, "projection.seed", int)
            checks = check_projections(k, p, samples, seed)
            passed = all(v for key, v in checks.items() if key != "samples")
            if fmt == "json":
                emit_json({"structure": structure.label, "seed": seed, "passed": passed, **checks})
            else:
                console.print(certificate_table(checks, f"Projection checks for {structure.label}"))

        if fmt == "text":
            if passed:
                print_success("Projection checks passed")
            else:
                print_error("Projection checks failed")

    if not passed:
        raise SystemExit(EXIT_FAILED)
