"""Deformation patterns: star masks, the shape catalog and block rules."""

from symdeform.patterns.pattern import (
    BlockMasks,
    PatternPair,
    StarMask,
    count_parameters,
    deform,
    full_pattern,
    instantiate,
    param_label,
    pattern_from_json,
    pattern_to_json,
    restrict_pattern,
)
from symdeform.patterns.shapes import ShapeKind, available_variants, register_shape, shape
from symdeform.patterns.catalog import assemble_pattern, diag_block_pattern, offdiag_block_pattern

__all__ = [
    "StarMask",
    "BlockMasks",
    "PatternPair",
    "ShapeKind",
    "shape",
    "register_shape",
    "available_variants",
    "diag_block_pattern",
    "offdiag_block_pattern",
    "assemble_pattern",
    "count_parameters",
    "instantiate",
    "deform",
    "full_pattern",
    "restrict_pattern",
    "param_label",
    "pattern_to_json",
    "pattern_from_json",
]
