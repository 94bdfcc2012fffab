"""
Catalog validation with a discrepancy ledger.

Every block of the catalog pattern is checked against its part of the
tangent space. A block that fails is replaced by the greedy star set for
that block and recorded; nothing is patched silently.
"""

import logging
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Set, Tuple

from symdeform.blocks import make_block
from symdeform.core import CanonicalStructure
from symdeform.patterns.pattern import MATRIX_TAGS, PatternPair, StarMask
from symdeform.patterns.catalog import assemble_pattern
from symdeform.tangent import (
    BlockCertificate,
    greedy_minimal_pattern,
    greedy_offdiagonal_masks,
    verify_blockwise,
)

logger = logging.getLogger(__name__)


@dataclass
class DiscrepancyEntry:
    """One catalog block that failed its check, with the substitute used."""

    i: int
    j: int
    failing_structure: CanonicalStructure
    catalog_params: int
    expected_params: int
    substituted: List[Tuple[str, int, int]] = field(default_factory=list)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "i": self.i,
            "j": self.j,
            "structure": self.failing_structure.label,
            "catalog_params": self.catalog_params,
            "expected_params": self.expected_params,
            "substituted": [f"{tag}[{r},{c}]" for tag, r, c in self.substituted],
        }


@dataclass
class Resolution:
    structure: CanonicalStructure
    pattern: PatternPair
    ledger: List[DiscrepancyEntry] = field(default_factory=list)

    @property
    def clean(self) -> bool:
        return not self.ledger


def _region(structure: CanonicalStructure, i: int, j: int) -> Tuple[range, range]:
    offsets = structure.offsets()
    rows = range(offsets[i], offsets[i] + structure.blocks[i].size)
    cols = range(offsets[j], offsets[j] + structure.blocks[j].size)
    return rows, cols


def _replace_block(
    stars: Tuple[Set[Tuple[int, int]], Set[Tuple[int, int]]],
    structure: CanonicalStructure,
    failure: BlockCertificate,
) -> List[Tuple[str, int, int]]:
    """Swap the stars of one failing block for the greedy ones; returns them 1-indexed."""
    i, j = failure.i, failure.j
    rows, cols = _region(structure, i, j)
    for target in stars:
        inside = [
            p
            for p in target
            if (p[0] in rows and p[1] in cols) or (p[1] in rows and p[0] in cols)
        ]
        target.difference_update(inside)

    if i == j:
        greedy = greedy_minimal_pattern(make_block(structure.blocks[i]))
        masks = greedy.masks()
    else:
        block_masks = greedy_offdiagonal_masks(
            make_block(structure.blocks[i]), make_block(structure.blocks[j])
        )
        masks = (block_masks.a, block_masks.b)

    substituted = []
    for m, mask in enumerate(masks):
        for r, c in sorted(mask.stars):
            row, col = rows.start + r, cols.start + c
            stars[m].add((row, col))
            stars[m].add((col, row))
            if i != j or r <= c:
                substituted.append((MATRIX_TAGS[m], r + 1, c + 1))
    return substituted


def resolve_pattern(
    structure: CanonicalStructure,
    variants: Optional[Dict[str, Optional[str]]] = None,
) -> Resolution:
    """
    Catalog pattern of ``structure`` with failing blocks replaced.

    Returns:
        Resolution holding the pattern and one ledger entry per failing block
    """
    pattern = assemble_pattern(structure, variants)
    report = verify_blockwise(structure, pattern)
    if report.passed:
        return Resolution(structure, pattern)

    stars = (set(pattern.mask_a.stars), set(pattern.mask_b.stars))
    ledger = []
    for failure in report.failures():
        blocks = (structure.blocks[failure.i],)
        if failure.i != failure.j:
            blocks += (structure.blocks[failure.j],)
        entry = DiscrepancyEntry(
            i=failure.i,
            j=failure.j,
            failing_structure=CanonicalStructure(blocks),
            catalog_params=failure.certificate.params,
            expected_params=failure.certificate.codimension,
            substituted=_replace_block(stars, structure, failure),
        )
        logger.warning(
            "catalog block (%d, %d) of %s is not miniversal (%d params, codim %d); "
            "substituted greedy stars %s",
            entry.i,
            entry.j,
            entry.failing_structure.label,
            entry.catalog_params,
            entry.expected_params,
            entry.to_dict()["substituted"],
        )
        ledger.append(entry)

    size = structure.size
    resolved = PatternPair(
        StarMask(size, size, frozenset(stars[0])), StarMask(size, size, frozenset(stars[1]))
    )
    return Resolution(structure, resolved, ledger)
