"""
Miniversal deformation patterns of canonical direct sums.

The pattern of a direct sum is built block by block. A diagonal block
depends only on its own summand; an off-diagonal block depends on the two
summands it joins. The (j, i) block is the transpose of the (i, j) block and
shares its parameters.
"""

import logging
from typing import Dict, Optional

from symdeform.core import BlockKind, BlockSpec, CanonicalStructure
from symdeform.patterns.pattern import BlockMasks, PatternPair, StarMask
from symdeform.patterns.shapes import ShapeKind, shape

logger = logging.getLogger(__name__)

# Order in which off-diagonal rules are listed; other orders are transposes.
_KIND_ORDER = {BlockKind.H: 0, BlockKind.K: 1, BlockKind.L: 2}


def diag_block_pattern(spec: BlockSpec) -> PatternPair:
    """
    Pattern of a single summand.

    H_n(λ): stars in B only, independent of λ. K_n: the same stars in A.
    L_n: a corner star in A and a band of three diagonals in B, both on the
    leading (n+1) x (n+1) sub-block.
    """
    size = spec.size
    zero = StarMask.empty(size, size)
    if spec.kind is BlockKind.H:
        return PatternPair(zero, shape(ShapeKind.NW_TRIPLE, size, size))
    if spec.kind is BlockKind.K:
        return PatternPair(shape(ShapeKind.NW_TRIPLE, size, size), zero)
    lead = spec.n + 1
    return PatternPair(
        shape(ShapeKind.CORNER_STAR, lead, lead).embed(size, size),
        shape(ShapeKind.NWSE_TRIPLE, lead, lead).embed(size, size),
    )


def _listed_offdiag(
    spec_i: BlockSpec, spec_j: BlockSpec, variants: Dict[str, Optional[str]]
) -> BlockMasks:
    """Rules for kind pairs in H, K, L order."""
    rows, cols = spec_i.size, spec_j.size
    zero = StarMask.empty(rows, cols)
    ki, kj = spec_i.kind, spec_j.kind

    if ki is BlockKind.H and kj is BlockKind.H:
        if spec_i.lam != spec_j.lam:
            return BlockMasks(zero, zero)
        return BlockMasks(zero, shape(ShapeKind.NW_SINGLE, rows, cols, variants.get("nw_single")))

    if ki is BlockKind.K and kj is BlockKind.K:
        return BlockMasks(shape(ShapeKind.NW_SINGLE, rows, cols, variants.get("nw_single")), zero)

    if ki is BlockKind.H and kj is BlockKind.K:
        return BlockMasks(zero, zero)

    if ki is BlockKind.H and kj is BlockKind.L:
        return BlockMasks(zero, shape(ShapeKind.LEFT_COL, rows, cols))

    m = spec_j.n
    if ki is BlockKind.K and kj is BlockKind.L:
        return BlockMasks(shape(ShapeKind.RIGHT_COL, rows, m + 1).embed(rows, cols), zero)

    # L_n against L_m: rows split n+1 | n, columns split m+1 | m
    n = spec_i.n
    a = shape(ShapeKind.CORNER_STAR, n + 1, m + 1).embed(rows, cols)
    cap = shape(ShapeKind.RIGHTHALFCAP, n + 1, m + 1, variants.get("righthalfcap"))
    q_top = shape(ShapeKind.Q_SHAPE, n + 1, m)
    q_left = shape(ShapeKind.Q_SHAPE, m + 1, n).transpose()
    b = (
        cap.embed(rows, cols)
        | q_top.embed(rows, cols, 0, m + 1)
        | q_left.embed(rows, cols, n + 1, 0)
    )
    return BlockMasks(a, b)


def offdiag_block_pattern(
    spec_i: BlockSpec,
    spec_j: BlockSpec,
    variants: Optional[Dict[str, Optional[str]]] = None,
) -> BlockMasks:
    """
    Masks of the (i, j) block joining summands i and j (i placed first).

    Args:
        spec_i: Summand owning the rows
        spec_j: Summand owning the columns
        variants: Optional catalog variants (``nw_single``, ``righthalfcap``)
            overriding the configured ones

    Returns:
        Rectangular masks of shape size_i x size_j
    """
    variants = variants or {}
    if _KIND_ORDER[spec_i.kind] <= _KIND_ORDER[spec_j.kind]:
        return _listed_offdiag(spec_i, spec_j, variants)
    return _listed_offdiag(spec_j, spec_i, variants).transpose()


def assemble_pattern(
    structure: CanonicalStructure,
    variants: Optional[Dict[str, Optional[str]]] = None,
) -> PatternPair:
    """Full pattern of a direct sum, partitioned conformally with its blocks."""
    size = structure.size
    offsets = structure.offsets()
    blocks = structure.blocks
    stars_a = set()
    stars_b = set()

    for idx, spec in enumerate(blocks):
        diag = diag_block_pattern(spec)
        o = offsets[idx]
        stars_a.update((i + o, j + o) for i, j in diag.mask_a.stars)
        stars_b.update((i + o, j + o) for i, j in diag.mask_b.stars)

    for i in range(len(blocks)):
        for j in range(i + 1, len(blocks)):
            masks = offdiag_block_pattern(blocks[i], blocks[j], variants)
            oi, oj = offsets[i], offsets[j]
            for target, mask in ((stars_a, masks.a), (stars_b, masks.b)):
                for r, c in mask.stars:
                    target.add((r + oi, c + oj))
                    target.add((c + oj, r + oi))

    pattern = PatternPair(
        StarMask(size, size, frozenset(stars_a)), StarMask(size, size, frozenset(stars_b))
    )
    logger.debug("pattern of %s: %d parameters", structure.label, len(pattern.params))
    return pattern
