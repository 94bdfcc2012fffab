"""Exact scalar and matrix arithmetic over Q(i)."""

from symdeform.exact.elimination import (
    pivot_columns,
    rank,
    rank_of_rows,
    solve_affine,
    solve_affine_many,
)
from symdeform.exact.matrix import ExactMatrix
from symdeform.exact.pair import (
    SymPair,
    sym_dimension,
    unvectorize_sym_pair,
    upper_positions,
    vector_index,
    vectorize_sym_pair,
)
from symdeform.exact.scalar import I, ONE, ZERO, GaussianRational, gr

__all__ = [
    "GaussianRational",
    "gr",
    "ZERO",
    "ONE",
    "I",
    "ExactMatrix",
    "SymPair",
    "sym_dimension",
    "upper_positions",
    "vector_index",
    "vectorize_sym_pair",
    "unvectorize_sym_pair",
    "rank",
    "rank_of_rows",
    "pivot_columns",
    "solve_affine",
    "solve_affine_many",
]
