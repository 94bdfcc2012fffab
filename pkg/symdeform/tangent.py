"""
Tangent space of the congruence orbit and miniversality checks.

The orbit of (A, B) under (A, B) -> (SᵀAS, SᵀBS) has tangent space
T(A, B) = {Cᵀ(A, B) + (A, B)C}. A pattern gives a miniversal deformation
exactly when its unit vectors complement T(A, B) in the space of symmetric
pairs, i.e. the two spans add up to the whole space with no overlap.

For a direct sum the check splits into blocks: diagonal block i only sees
T(A_i, B_i), and the off-diagonal block (i, j) only sees
{R(A_j, B_j) + (A_i, B_i)S} for arbitrary R, S.
"""

import logging
from dataclasses import asdict, dataclass, field
from functools import lru_cache
from typing import Any, Dict, List, Sequence, Tuple

from symdeform.blocks import assemble, make_block
from symdeform.core import CanonicalStructure
from symdeform.errors import InputError
from symdeform.exact.elimination import pivot_columns, rank_of_rows
from symdeform.exact.matrix import ExactMatrix
from symdeform.exact.pair import SymPair, sym_dimension, upper_positions
from symdeform.exact.scalar import ZERO, GaussianRational
from symdeform.patterns.pattern import (
    BlockMasks,
    PatternPair,
    StarMask,
    count_parameters,
    restrict_pattern,
)

logger = logging.getLogger(__name__)

Vector = Tuple[GaussianRational, ...]

ORDERS = ("vectorized", "interleaved")


# ----------------------------------------------------------------------
# Tangent vectors
# ----------------------------------------------------------------------


def tangent_perturbation(k: SymPair, c: ExactMatrix) -> SymPair:
    """Return (CᵀA + AC, CᵀB + BC)."""
    n = k.size
    if c.shape != (n, n):
        raise InputError(f"Generator must be {n}x{n}, got {c.rows}x{c.cols}")
    ct = c.transpose()
    return SymPair(ct @ k.a + k.a @ c, ct @ k.b + k.b @ c)


def _elementary_image(m: ExactMatrix, k: int, l: int) -> List[GaussianRational]:
    """Entries of E_klᵀ M + M E_kl: row l gets row k of M, column l gets column k."""
    n = m.rows
    out = [ZERO] * (n * n)
    for j in range(n):
        v = m.entries[k * n + j]
        if not v.is_zero:
            out[l * n + j] = out[l * n + j] + v
    for i in range(n):
        v = m.entries[i * n + k]
        if not v.is_zero:
            out[i * n + l] = out[i * n + l] + v
    return out


@dataclass(frozen=True)
class TangentBasis:
    """Images of all n² elementary generators E_kl (a spanning set of T)."""

    base_pair: SymPair
    generators: Tuple[Tuple[ExactMatrix, SymPair], ...]

    @property
    def vectors(self) -> List[Vector]:
        return list(tangent_vectors(self.base_pair))


def tangent_basis(k: SymPair) -> TangentBasis:
    n = k.size
    generators = []
    for kk in range(n):
        for ll in range(n):
            c = ExactMatrix.elementary(n, n, kk, ll)
            image = SymPair(
                ExactMatrix(n, n, tuple(_elementary_image(k.a, kk, ll))),
                ExactMatrix(n, n, tuple(_elementary_image(k.b, kk, ll))),
            )
            generators.append((c, image))
    return TangentBasis(k, tuple(generators))


@lru_cache(maxsize=256)
def tangent_vectors(k: SymPair) -> Tuple[Vector, ...]:
    """Coordinate vectors of the n² elementary tangent images."""
    n = k.size
    positions = upper_positions(n)
    vectors = []
    for kk in range(n):
        for ll in range(n):
            a = _elementary_image(k.a, kk, ll)
            b = _elementary_image(k.b, kk, ll)
            vectors.append(
                tuple(a[i * n + j] for i, j in positions)
                + tuple(b[i * n + j] for i, j in positions)
            )
    return tuple(vectors)


@lru_cache(maxsize=256)
def tangent_rank(k: SymPair) -> int:
    return rank_of_rows(tangent_vectors(k), sym_dimension(k.size))


def codimension(k: SymPair) -> int:
    """Codimension n(n+1) - dim T of the congruence orbit."""
    result = sym_dimension(k.size) - tangent_rank(k)
    logger.debug("codimension of size-%d pair = %d", k.size, result)
    return result


# ----------------------------------------------------------------------
# Complement checks
# ----------------------------------------------------------------------


def _combined_rank(vectors: Sequence[Vector], dimension: int, star_columns: Sequence[int]) -> int:
    """
    Rank of the tangent vectors together with the star unit vectors.

    The unit vectors of distinct coordinates are independent, so the combined
    rank is their count plus the rank of the vectors with those coordinates
    deleted.
    """
    stars = set(star_columns)
    if not stars:
        return rank_of_rows(vectors, dimension)
    keep = [c for c in range(dimension) if c not in stars]
    reduced = [tuple(v[c] for c in keep) for v in vectors]
    return len(stars) + rank_of_rows(reduced, len(keep))


@dataclass(frozen=True)
class MiniversalityCertificate:
    """Ranks proving (or refuting) that a pattern complements the tangent space."""

    dimension: int
    tangent_rank: int
    combined_rank: int
    params: int

    @property
    def codimension(self) -> int:
        return self.dimension - self.tangent_rank

    @property
    def spans(self) -> bool:
        return self.combined_rank == self.dimension

    @property
    def miniversal(self) -> bool:
        return self.spans and self.params == self.codimension

    def __bool__(self) -> bool:
        return self.miniversal

    def to_dict(self) -> Dict[str, Any]:
        data = asdict(self)
        data.update(codim=self.codimension, direct_sum=self.miniversal)
        return data


def is_miniversal(k: SymPair, p: PatternPair) -> MiniversalityCertificate:
    """
    Check that T(A, B) and the pattern span the pair space as a direct sum.

    Raises:
        InputError: if the pattern and pair sizes differ
    """
    if k.size != p.size:
        raise InputError(f"Pair size {k.size} does not match pattern size {p.size}")
    dimension = sym_dimension(k.size)
    cached_rank = tangent_rank(k)
    combined = _combined_rank(tangent_vectors(k), dimension, p.vector_indices())
    cert = MiniversalityCertificate(dimension, cached_rank, combined, count_parameters(p))
    logger.debug("miniversality: %s", cert)
    return cert


# ----------------------------------------------------------------------
# Off-diagonal blocks
# ----------------------------------------------------------------------


def offdiagonal_tangent_vectors(k_i: SymPair, k_j: SymPair) -> List[Vector]:
    """
    Spanning vectors of {R(A_j, B_j) + (A_i, B_i)S} on a p x q block.

    Coordinates: the A block row by row, then the B block.
    """
    p, q = k_i.size, k_j.size
    block = p * q
    vectors: List[Vector] = []
    # R = E_ab: row a of the image is row b of the right-hand matrix
    for a in range(p):
        for b in range(q):
            out = [ZERO] * (2 * block)
            for t, m in enumerate((k_j.a, k_j.b)):
                for col in range(q):
                    out[t * block + a * q + col] = m.entries[b * q + col]
            vectors.append(tuple(out))
    # S = E_ab: column b of the image is column a of the left-hand matrix
    for a in range(p):
        for b in range(q):
            out = [ZERO] * (2 * block)
            for t, m in enumerate((k_i.a, k_i.b)):
                for row in range(p):
                    out[t * block + row * q + b] = m.entries[row * p + a]
            vectors.append(tuple(out))
    return vectors


def offdiagonal_codimension(k_i: SymPair, k_j: SymPair) -> int:
    dimension = 2 * k_i.size * k_j.size
    return dimension - rank_of_rows(offdiagonal_tangent_vectors(k_i, k_j), dimension)


def _mask_columns(masks: BlockMasks) -> List[int]:
    rows, cols = masks.shape
    block = rows * cols
    return sorted(
        [i * cols + j for i, j in masks.a.stars]
        + [block + i * cols + j for i, j in masks.b.stars]
    )


def check_offdiagonal(
    k_i: SymPair, k_j: SymPair, masks: BlockMasks
) -> MiniversalityCertificate:
    """Complement check of one off-diagonal block against its tangent part."""
    if masks.shape != (k_i.size, k_j.size):
        raise InputError(
            f"Block masks {masks.shape} do not match block {k_i.size}x{k_j.size}"
        )
    dimension = 2 * k_i.size * k_j.size
    columns = _mask_columns(masks)
    vectors = offdiagonal_tangent_vectors(k_i, k_j)
    t_rank = rank_of_rows(vectors, dimension)
    combined = _combined_rank(vectors, dimension, columns)
    return MiniversalityCertificate(dimension, t_rank, combined, len(columns))


def extract_block_masks(
    p: PatternPair, structure: CanonicalStructure, i: int, j: int
) -> BlockMasks:
    """The (i, j) block of a pattern's masks."""
    offsets = structure.offsets()
    oi, oj = offsets[i], offsets[j]
    si, sj = structure.blocks[i].size, structure.blocks[j].size

    def cut(mask: StarMask) -> StarMask:
        return StarMask(
            si,
            sj,
            frozenset(
                (r - oi, c - oj)
                for r, c in mask.stars
                if oi <= r < oi + si and oj <= c < oj + sj
            ),
        )

    return BlockMasks(cut(p.mask_a), cut(p.mask_b))


@dataclass
class BlockCertificate:
    """Certificate of one diagonal (i == j) or off-diagonal block."""

    i: int
    j: int
    certificate: MiniversalityCertificate

    @property
    def passed(self) -> bool:
        return self.certificate.miniversal

    def to_dict(self) -> Dict[str, Any]:
        return {"i": self.i, "j": self.j, "passed": self.passed, **self.certificate.to_dict()}


@dataclass
class BlockwiseReport:
    structure: CanonicalStructure
    blocks: List[BlockCertificate] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(b.passed for b in self.blocks)

    def failures(self) -> List[BlockCertificate]:
        return [b for b in self.blocks if not b.passed]

    def to_dict(self) -> Dict[str, Any]:
        return {
            "structure": self.structure.label,
            "passed": self.passed,
            "blocks": [b.to_dict() for b in self.blocks],
        }


def verify_blockwise(structure: CanonicalStructure, p: PatternPair) -> BlockwiseReport:
    """Check every diagonal and off-diagonal block of a pattern separately."""
    if p.size != structure.size:
        raise InputError(
            f"Pattern size {p.size} does not match structure size {structure.size}"
        )
    pairs = [make_block(b) for b in structure.blocks]
    report = BlockwiseReport(structure)
    for i, pair in enumerate(pairs):
        report.blocks.append(
            BlockCertificate(i, i, is_miniversal(pair, restrict_pattern(p, structure, i, i)))
        )
    for i in range(len(pairs)):
        for j in range(i + 1, len(pairs)):
            masks = extract_block_masks(p, structure, i, j)
            cert = check_offdiagonal(pairs[i], pairs[j], masks)
            report.blocks.append(BlockCertificate(i, j, cert))
    for failure in report.failures():
        logger.debug(
            "block (%d, %d) of %s fails: %s",
            failure.i,
            failure.j,
            structure.label,
            failure.certificate,
        )
    return report


def verify_block_pair(spec_i, spec_j, restriction: PatternPair) -> MiniversalityCertificate:
    """Full check of the two-summand sum K_i ⊕ K_j against a restricted pattern."""
    pair_structure = CanonicalStructure((spec_i, spec_j))
    return is_miniversal(assemble(pair_structure), restriction)


# ----------------------------------------------------------------------
# Codimension bookkeeping
# ----------------------------------------------------------------------


@dataclass
class CodimensionTable:
    """Codimension split into diagonal and off-diagonal contributions."""

    structure: CanonicalStructure
    diagonal: List[Tuple[int, int]] = field(default_factory=list)
    offdiagonal: List[Tuple[int, int, int]] = field(default_factory=list)

    @property
    def total(self) -> int:
        return sum(c for _, c in self.diagonal) + sum(c for _, _, c in self.offdiagonal)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "structure": self.structure.label,
            "diagonal": [{"i": i, "codim": c} for i, c in self.diagonal],
            "offdiagonal": [{"i": i, "j": j, "codim": c} for i, j, c in self.offdiagonal],
            "total": self.total,
        }


def codimension_table(structure: CanonicalStructure) -> CodimensionTable:
    pairs = [make_block(b) for b in structure.blocks]
    table = CodimensionTable(structure)
    for i, pair in enumerate(pairs):
        table.diagonal.append((i, codimension(pair)))
    for i in range(len(pairs)):
        for j in range(i + 1, len(pairs)):
            table.offdiagonal.append((i, j, offdiagonal_codimension(pairs[i], pairs[j])))
    return table


def excess_codimension(structure: CanonicalStructure) -> int:
    """Codimension of the sum minus the codimensions of its summands."""
    whole = codimension(assemble(structure))
    return whole - sum(codimension(make_block(b)) for b in structure.blocks)


# ----------------------------------------------------------------------
# Greedy construction
# ----------------------------------------------------------------------


def _scan_order(count: int, order: str) -> List[int]:
    """Coordinate scan order over two halves of ``count`` coordinates each."""
    if order == "vectorized":
        return list(range(2 * count))
    if order == "interleaved":
        return [idx for pos in range(count) for idx in (pos, count + pos)]
    raise InputError(f"Unknown greedy order {order!r} (expected one of {', '.join(ORDERS)})")


def _greedy_keep(vectors: Sequence[Vector], dimension: int, scan: List[int]) -> List[int]:
    """
    Coordinates whose unit vectors a greedy scan keeps.

    A unit vector is kept when it is independent of the tangent vectors and
    of the unit vectors scanned before it; those are the non-pivot columns of
    an elimination visiting columns in reverse scan order.
    """
    pivots = set(pivot_columns(vectors, dimension, list(reversed(scan))))
    return [c for c in scan if c not in pivots]


def greedy_minimal_pattern(k: SymPair, order: str = "vectorized") -> PatternPair:
    """
    Pattern obtained by scanning unit pairs and keeping each one that is not
    a combination of the tangent space and the pairs kept so far.

    The count always equals the codimension; positions depend on ``order``.
    """
    n = k.size
    positions = upper_positions(n)
    half = len(positions)
    scan = _scan_order(half, order)
    kept = _greedy_keep(tangent_vectors(k), sym_dimension(n), scan)
    params = [(idx // half, *positions[idx % half]) for idx in kept]
    logger.debug("greedy (%s) kept %d coordinate(s): %s", order, len(params), params)
    return PatternPair.from_params(n, params)


def greedy_offdiagonal_masks(
    k_i: SymPair, k_j: SymPair, order: str = "vectorized"
) -> BlockMasks:
    """Greedy star set of the off-diagonal block joining ``k_i`` and ``k_j``."""
    p, q = k_i.size, k_j.size
    block = p * q
    scan = _scan_order(block, order)
    kept = _greedy_keep(offdiagonal_tangent_vectors(k_i, k_j), 2 * block, scan)
    stars: Tuple[set, set] = (set(), set())
    for idx in kept:
        stars[idx // block].add(divmod(idx % block, q))
    return BlockMasks(StarMask(p, q, frozenset(stars[0])), StarMask(p, q, frozenset(stars[1])))
