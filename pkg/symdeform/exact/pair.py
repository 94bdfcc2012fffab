"""
Symmetric matrix pairs and their coordinates.

The coordinate vector of a pair of n x n symmetric matrices lists the upper
triangle (diagonal included) of A row by row, followed by that of B. Its
length is n(n+1). Greedy constructions scan positions in this order.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, List, Sequence, Tuple

from symdeform.errors import InputError, InvariantError, SizeError
from symdeform.exact.matrix import ExactMatrix
from symdeform.exact.scalar import ZERO, GaussianRational, gr


@dataclass(frozen=True)
class SymPair:
    """A pair (A, B) of symmetric matrices of the same size."""

    a: ExactMatrix
    b: ExactMatrix

    def __post_init__(self):
        if not self.a.is_square or not self.b.is_square:
            raise InvariantError(
                f"Pair matrices must be square, got {self.a.shape} and {self.b.shape}"
            )
        if self.a.rows != self.b.rows:
            raise InvariantError(f"Pair matrices differ in size: {self.a.rows} vs {self.b.rows}")
        if not self.a.is_symmetric():
            raise InvariantError("First matrix of the pair is not symmetric")
        if not self.b.is_symmetric():
            raise InvariantError("Second matrix of the pair is not symmetric")

    @classmethod
    def zero(cls, n: int) -> "SymPair":
        z = ExactMatrix.zeros(n)
        return cls(z, z)

    @classmethod
    def from_rows(
        cls, a_rows: Sequence[Sequence[object]], b_rows: Sequence[Sequence[object]]
    ) -> "SymPair":
        return cls(ExactMatrix.from_rows(a_rows), ExactMatrix.from_rows(b_rows))

    @property
    def size(self) -> int:
        return self.a.rows

    def swap(self) -> "SymPair":
        return SymPair(self.b, self.a)

    def direct_sum(self, other: "SymPair") -> "SymPair":
        return SymPair(
            ExactMatrix.block_diag([self.a, other.a]),
            ExactMatrix.block_diag([self.b, other.b]),
        )

    @classmethod
    def direct_sum_of(cls, pairs: Iterable["SymPair"]) -> "SymPair":
        pairs = list(pairs)
        return cls(
            ExactMatrix.block_diag([p.a for p in pairs]),
            ExactMatrix.block_diag([p.b for p in pairs]),
        )

    def __add__(self, other: "SymPair") -> "SymPair":
        if not isinstance(other, SymPair):
            return NotImplemented
        return SymPair(self.a + other.a, self.b + other.b)

    def __sub__(self, other: "SymPair") -> "SymPair":
        if not isinstance(other, SymPair):
            return NotImplemented
        return SymPair(self.a - other.a, self.b - other.b)

    def __neg__(self) -> "SymPair":
        return SymPair(-self.a, -self.b)

    def scale(self, factor: object) -> "SymPair":
        return SymPair(self.a.scale(factor), self.b.scale(factor))

    def congruence(self, s: ExactMatrix) -> "SymPair":
        """Return (SᵀAS, SᵀBS)."""
        if s.rows != self.size:
            raise InputError(f"Congruence matrix has {s.rows} rows, pair has size {self.size}")
        st = s.transpose()
        return SymPair(st @ self.a @ s, st @ self.b @ s)

    def is_zero(self) -> bool:
        return self.a.is_zero() and self.b.is_zero()

    def to_strings(self) -> dict:
        return {"a": self.a.to_strings(), "b": self.b.to_strings()}


def sym_dimension(n: int) -> int:
    """Dimension n(n+1) of the space of symmetric pairs."""
    return n * (n + 1)


def upper_positions(n: int) -> List[Tuple[int, int]]:
    """Upper-triangle positions (i <= j) in row-major order."""
    return [(i, j) for i in range(n) for j in range(i, n)]


def vector_index(n: int, matrix: int, i: int, j: int) -> int:
    """
    Coordinate index of entry (i, j) of matrix 0 (A) or 1 (B).

    The pair (i, j) and (j, i) share an index.
    """
    if i > j:
        i, j = j, i
    # rows 0..i-1 contribute n, n-1, ..., n-i+1 entries
    offset = i * n - i * (i - 1) // 2 + (j - i)
    return matrix * (n * (n + 1) // 2) + offset


def vectorize_sym_pair(p: SymPair) -> Tuple[GaussianRational, ...]:
    """Coordinate vector of ``p`` (upper triangle of A, then of B)."""
    if not isinstance(p, SymPair):
        raise InvariantError(f"Expected a SymPair, got {type(p).__name__}")
    n = p.size
    out: List[GaussianRational] = []
    for m in (p.a, p.b):
        for i, j in upper_positions(n):
            out.append(m.entries[i * n + j])
    return tuple(out)


def vectorize_matrices(a: ExactMatrix, b: ExactMatrix) -> Tuple[GaussianRational, ...]:
    """Vectorize two matrices after checking that they form a symmetric pair."""
    return vectorize_sym_pair(SymPair(a, b))


def unvectorize_sym_pair(v: Sequence[object], n: int) -> SymPair:
    """Inverse of :func:`vectorize_sym_pair`."""
    if len(v) != sym_dimension(n):
        raise SizeError(
            f"Vector of length {len(v)} does not match size {n} (need {sym_dimension(n)})"
        )
    values = [gr(x) for x in v]
    half = n * (n + 1) // 2
    mats = []
    for m in range(2):
        entries = [ZERO] * (n * n)
        for k, (i, j) in enumerate(upper_positions(n)):
            entries[i * n + j] = entries[j * n + i] = values[m * half + k]
        mats.append(ExactMatrix(n, n, tuple(entries)))
    return SymPair(mats[0], mats[1])
