"""Verification sweeps over enumerated structures."""

from pathlib import Path
from typing import Optional

import click
from rich.progress import track

from symdeform.cli.utils import (
    EXIT_FAILED,
    emit_json,
    format_option,
    handle_errors,
    option_or_config,
    print_error,
    print_info,
    print_success,
    print_warning,
    resolve_format,
)
from symdeform.storage import write_report
from symdeform.sweep import (
    SweepReport,
    block_families,
    check_structure,
    pair_structures,
    parse_lambdas,
    run_sweep,
    single_block_structures,
    triple_structures,
)


@click.command()
@click.option("--max-block-n", type=int, help="Largest block index n")
@click.option("--max-total", type=int, help="Largest total size of pairs and triples")
@click.option("--lambdas", help="Eigenvalue samples, e.g. '0,1,-1,1/2,1+1i'")
@click.option("--triples", type=int, help="Maximum number of three-block structures")
@click.option("--workers", type=int, help="Worker processes")
@click.option("--samples", type=int, help="Projection checks per structure (0 disables)")
@click.option("--seed", type=int, help="Base seed for projection checks")
@click.option("--no-pairs", is_flag=True, help="Skip two-block structures")
@click.option("--no-triples", is_flag=True, help="Skip three-block structures")
@click.option(
    "--report",
    "report_path",
    type=click.Path(dir_okay=False, path_type=Path),
    help="Also write the JSON report to this file",
)
@format_option
def sweep(
    max_block_n: Optional[int],
    max_total: Optional[int],
    lambdas: Optional[str],
    triples: Optional[int],
    workers: Optional[int],
    samples: Optional[int],
    seed: Optional[int],
    no_pairs: bool,
    no_triples: bool,
    report_path: Optional[Path],
    output_format: Optional[str],
):
    """Verify every structure within the bounds and print the ledger."""
    fmt = resolve_format(output_format)

    with handle_errors("run sweep"):
        max_block_n = option_or_config(max_block_n, "sweep.max_block_n", int)
        max_total = option_or_config(max_total, "sweep.max_total", int)
        lambdas = option_or_config(lambdas, "sweep.lambdas", str)
        triples = option_or_config(triples, "sweep.triples", int)
        workers = option_or_config(workers, "sweep.workers", int)
        samples = option_or_config(samples, "projection.samples", int)
        seed = option_or_config(seed, "projection.seed", int)
        if max_total < 1:
            raise click.BadParameter("must be positive", param_hint="--max-total")
        families = block_families(max_block_n, parse_lambdas(lambdas))
        structures = single_block_structures(families)
        if not no_pairs:
            structures += pair_structures(families, max_total)
        if not no_triples:
            structures += triple_structures(families, max_total, triples)

        if fmt == "text":
            print_info(f"Checking {len(structures)} structure(s)...")
        if workers == 1 and fmt == "text":
            report = SweepReport(
                [
                    check_structure(i, s, samples, seed)
                    for i, s in enumerate(track(structures, description="Sweeping"))
                ]
            )
        else:
            report = run_sweep(structures, workers=workers, project_samples=samples, seed=seed)

        data = report.to_dict()
        if report_path is not None:
            write_report(data, report_path)

        if fmt == "json":
            emit_json(data)
        else:
            for item in report.failures():
                print_error(f"#{item.index} {item.structure} failed")
            for entry in report.ledger():
                print_warning(f"ledger: {entry}")
            if report.passed:
                print_success(f"All {len(report.items)} structure(s) passed; ledger empty")
            else:
                print_error(f"{len(report.failures())} of {len(report.items)} structure(s) failed")

    if not report.passed:
        raise SystemExit(EXIT_FAILED)
