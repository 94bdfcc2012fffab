"""
symdeform: miniversal deformations of pairs of symmetric matrices

Exact construction of canonical pairs under congruence, their (0,*)
deformation patterns, tangent-space certificates and slice projections.
"""

__version__ = "0.1.0"

from symdeform.config import get_config, set_config
from symdeform.core import BlockKind, BlockSpec, CanonicalStructure
from symdeform.blocks import assemble, make_block
from symdeform.exact import ExactMatrix, GaussianRational, SymPair, rank
from symdeform.patterns import PatternPair, StarMask, assemble_pattern, count_parameters
from symdeform.tangent import (
    MiniversalityCertificate,
    codimension,
    greedy_minimal_pattern,
    is_miniversal,
)
from symdeform.ledger import resolve_pattern
from symdeform.slice import SliceProjection, project_to_slice
from symdeform.sweep import run_sweep

__all__ = [
    # Version
    "__version__",
    # Configuration
    "get_config",
    "set_config",
    # Structures
    "BlockKind",
    "BlockSpec",
    "CanonicalStructure",
    "assemble",
    "make_block",
    # Exact arithmetic
    "GaussianRational",
    "ExactMatrix",
    "SymPair",
    "rank",
    # Patterns
    "StarMask",
    "PatternPair",
    "assemble_pattern",
    "count_parameters",
    "resolve_pattern",
    # Tangent space
    "MiniversalityCertificate",
    "codimension",
    "is_miniversal",
    "greedy_minimal_pattern",
    # Slice
    "SliceProjection",
    "project_to_slice",
    # Sweeps
    "run_sweep",
]
