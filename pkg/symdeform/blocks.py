"""
Canonical summands of symmetric pairs under congruence.

Every pair of complex symmetric matrices is congruent to a direct sum of

    H_n(λ) = (Δ_n, Λ_n(λ))
    K_n    = (Λ_n(0), Δ_n)
    L_n    = ([0 F_nᵀ; F_n 0], [0 G_nᵀ; G_n 0])

unique up to the order of the summands. Indices below are 0-based.
"""

from typing import Tuple

from symdeform.core import BlockKind, BlockSpec, CanonicalStructure
from symdeform.errors import SizeError
from symdeform.exact.matrix import ExactMatrix
from symdeform.exact.pair import SymPair
from symdeform.exact.scalar import ONE, ZERO, GaussianRational, gr


def lambda_matrix(n: int, lam: object) -> ExactMatrix:
    """λ on the anti-diagonal, 1 on the diagonal just below it."""
    if n < 1:
        raise SizeError(f"Lambda matrix needs n >= 1, got {n}")
    value = gr(lam)
    entries = []
    for i in range(n):
        for j in range(n):
            if i + j == n - 1:
                entries.append(value)
            elif i + j == n:
                entries.append(ONE)
            else:
                entries.append(ZERO)
    return ExactMatrix(n, n, tuple(entries))


def delta_matrix(n: int) -> ExactMatrix:
    """The n x n anti-identity."""
    if n < 1:
        raise SizeError(f"Delta matrix needs n >= 1, got {n}")
    return ExactMatrix(
        n, n, tuple(ONE if i + j == n - 1 else ZERO for i in range(n) for j in range(n))
    )


def fg_matrices(n: int) -> Tuple[ExactMatrix, ExactMatrix]:
    """F_n = [I_n 0] and G_n = [0 I_n], both n x (n+1)."""
    if n < 0:
        raise SizeError(f"F/G matrices need n >= 0, got {n}")
    cols = n + 1
    f = tuple(ONE if j == i else ZERO for i in range(n) for j in range(cols))
    g = tuple(ONE if j == i + 1 else ZERO for i in range(n) for j in range(cols))
    return ExactMatrix(n, cols, f), ExactMatrix(n, cols, g)


def _l_half(m: ExactMatrix) -> ExactMatrix:
    """[0 mᵀ; m 0] for an n x (n+1) matrix m."""
    n, cols = m.rows, m.cols
    top = ExactMatrix.hstack([ExactMatrix.zeros(cols, cols), m.transpose()])
    bottom = ExactMatrix.hstack([m, ExactMatrix.zeros(n, n)])
    return ExactMatrix.vstack([top, bottom])


def make_block(spec: BlockSpec) -> SymPair:
    """The canonical pair of one summand."""
    if spec.kind is BlockKind.H:
        return SymPair(delta_matrix(spec.n), lambda_matrix(spec.n, spec.lam))
    if spec.kind is BlockKind.K:
        return SymPair(lambda_matrix(spec.n, GaussianRational()), delta_matrix(spec.n))
    f, g = fg_matrices(spec.n)
    return SymPair(_l_half(f), _l_half(g))


def assemble(structure: CanonicalStructure) -> SymPair:
    """Direct sum of the summands in the given order."""
    return SymPair.direct_sum_of(make_block(b) for b in structure.blocks)
