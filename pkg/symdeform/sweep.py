"""
Deterministic enumeration of canonical structures and verification sweeps.

Structures are listed with sizes ascending and eigenvalues in the order
given, so a failing item can be reproduced from its index.
"""

import logging
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations_with_replacement
from typing import Any, Dict, List, Optional, Sequence

from symdeform.blocks import assemble
from symdeform.core import BlockSpec, CanonicalStructure
from symdeform.errors import InputError
from symdeform.exact.scalar import GaussianRational
from symdeform.ledger import resolve_pattern
from symdeform.patterns.pattern import PatternPair, count_parameters, param_label
from symdeform.patterns.catalog import assemble_pattern
from symdeform.slice import check_projections
from symdeform.tangent import excess_codimension, greedy_minimal_pattern, is_miniversal

logger = logging.getLogger(__name__)


def parse_lambdas(text: str) -> List[GaussianRational]:
    """Parse a comma-separated eigenvalue list such as ``0,1,-1,1/2,1+1i``."""
    values = []
    for item in text.split(","):
        item = item.strip()
        if item:
            values.append(GaussianRational.parse(item))
    if not values:
        raise InputError("Eigenvalue list is empty")
    return values


def block_families(max_block_n: int, lambdas: Sequence[object]) -> List[BlockSpec]:
    """H_n(λ) for every n and λ, then K_n, then L_n (n up to max_block_n - 1)."""
    if max_block_n < 1:
        raise InputError(f"max_block_n must be positive, got {max_block_n}")
    lams = [GaussianRational.coerce(lam) for lam in lambdas]
    families = [BlockSpec.h(n, lam) for n in range(1, max_block_n + 1) for lam in lams]
    families += [BlockSpec.k(n) for n in range(1, max_block_n + 1)]
    families += [BlockSpec.l(n) for n in range(max_block_n)]
    return families


def single_block_structures(families: Sequence[BlockSpec]) -> List[CanonicalStructure]:
    return [CanonicalStructure((b,)) for b in families]


def pair_structures(families: Sequence[BlockSpec], max_total: int) -> List[CanonicalStructure]:
    """All ordered pairs of families with total size at most ``max_total``."""
    return [
        CanonicalStructure((a, b))
        for a in families
        for b in families
        if a.size + b.size <= max_total
    ]


def triple_structures(
    families: Sequence[BlockSpec], max_total: int, limit: int
) -> List[CanonicalStructure]:
    """
    At most ``limit`` three-block structures of total size at most ``max_total``.

    Candidates are multisets of families; when there are more than ``limit``
    the selection is spread evenly over the candidate list.
    """
    candidates = [
        combo
        for combo in combinations_with_replacement(range(len(families)), 3)
        if sum(families[i].size for i in combo) <= max_total
    ]
    if limit <= 0:
        return []
    if len(candidates) > limit:
        candidates = [candidates[t * len(candidates) // limit] for t in range(limit)]
    return [CanonicalStructure(tuple(families[i] for i in combo)) for combo in candidates]


def _star_labels(p: PatternPair) -> List[str]:
    return [param_label(p, pid) for pid in range(count_parameters(p))]


@dataclass
class SweepItem:
    """Result of checking one structure."""

    index: int
    structure: str
    certificate: Dict[str, Any]
    catalog_params: int
    greedy_params: int
    catalog_stars: List[str] = field(default_factory=list)
    greedy_stars: List[str] = field(default_factory=list)
    ledger: List[Dict[str, Any]] = field(default_factory=list)
    projection: Optional[Dict[str, Any]] = None
    seconds: float = 0.0

    @property
    def passed(self) -> bool:
        projection_ok = self.projection is None or all(
            v for k, v in self.projection.items() if k != "samples"
        )
        return (
            self.certificate["direct_sum"]
            and not self.ledger
            and self.greedy_params == self.catalog_params
            and projection_ok
        )

    def to_dict(self) -> Dict[str, Any]:
        return {
            "index": self.index,
            "structure": self.structure,
            "passed": self.passed,
            "certificate": self.certificate,
            "catalog_params": self.catalog_params,
            "greedy_params": self.greedy_params,
            "catalog_stars": self.catalog_stars,
            "greedy_stars": self.greedy_stars,
            "ledger": self.ledger,
            "projection": self.projection,
            "seconds": round(self.seconds, 4),
        }


@dataclass
class SweepReport:
    items: List[SweepItem] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(item.passed for item in self.items)

    def failures(self) -> List[SweepItem]:
        return [item for item in self.items if not item.passed]

    def ledger(self) -> List[Dict[str, Any]]:
        return [dict(entry, item=item.index) for item in self.items for entry in item.ledger]

    def to_dict(self) -> Dict[str, Any]:
        return {
            "total": len(self.items),
            "passed": self.passed,
            "failures": [item.index for item in self.failures()],
            "ledger": self.ledger(),
            "items": [item.to_dict() for item in self.items],
        }


def check_structure(
    index: int,
    structure: CanonicalStructure,
    project_samples: int = 0,
    seed: int = 0,
    variants: Optional[Dict[str, Optional[str]]] = None,
) -> SweepItem:
    """Catalog certificate, greedy comparison, ledger and projections for one structure."""
    started = time.perf_counter()
    k = assemble(structure)
    catalog = assemble_pattern(structure, variants)
    certificate = is_miniversal(k, catalog)
    resolution = resolve_pattern(structure, variants)
    greedy = greedy_minimal_pattern(k)

    projection = None
    if project_samples > 0:
        projection = check_projections(k, resolution.pattern, project_samples, seed + index)

    item = SweepItem(
        index=index,
        structure=structure.label,
        certificate=certificate.to_dict(),
        catalog_params=count_parameters(catalog),
        greedy_params=count_parameters(greedy),
        catalog_stars=_star_labels(catalog),
        greedy_stars=_star_labels(greedy),
        ledger=[entry.to_dict() for entry in resolution.ledger],
        projection=projection,
        seconds=time.perf_counter() - started,
    )
    logger.debug(
        "item %d %s: %s in %.3fs",
        index,
        item.structure,
        "ok" if item.passed else "FAIL",
        item.seconds,
    )
    return item


def _check_from_dict(args: Dict[str, Any]) -> SweepItem:
    # Process-pool entry point; structures travel as plain dicts.
    return check_structure(
        args["index"],
        CanonicalStructure.from_dict(args["structure"]),
        args["project_samples"],
        args["seed"],
        args["variants"],
    )


def run_sweep(
    structures: Sequence[CanonicalStructure],
    workers: int = 1,
    project_samples: int = 0,
    seed: int = 0,
    variants: Optional[Dict[str, Optional[str]]] = None,
) -> SweepReport:
    """
    Check every structure; items come back in input order.

    Args:
        structures: Structures to check
        workers: Worker processes (1 runs in-process)
        project_samples: Random projection checks per structure (0 disables)
        seed: Base seed; item i uses ``seed + i``
        variants: Catalog variant overrides
    """
    if workers < 1:
        raise InputError(f"workers must be positive, got {workers}")
    if workers == 1 or len(structures) <= 1:
        items = [
            check_structure(i, s, project_samples, seed, variants) for i, s in enumerate(structures)
        ]
    else:
        jobs = [
            {
                "index": i,
                "structure": s.to_dict(),
                "project_samples": project_samples,
                "seed": seed,
                "variants": variants,
            }
            for i, s in enumerate(structures)
        ]
        with ProcessPoolExecutor(max_workers=workers) as executor:
            items = list(executor.map(_check_from_dict, jobs))
    report = SweepReport(items)
    logger.info("sweep: %d item(s), %d failure(s)", len(items), len(report.failures()))
    return report


def lambda_dichotomy(n: int, m: int, lam: object, mu: object) -> int:
    """Excess codimension of H_n(λ) ⊕ H_m(μ) over its two summands."""
    return excess_codimension(CanonicalStructure((BlockSpec.h(n, lam), BlockSpec.h(m, mu))))
