"""
First-order projection onto a miniversal slice.

For a miniversal pattern P of K = (A, B) the pair space splits as
T(A, B) ⊕ span(P), so every perturbation E has a unique decomposition

    E + Cᵀ(A, B) + (A, B)C = instantiate(P, d).

Only the first-order (linear) part of the reduction is computed; the
higher-order terms of the full holomorphic normalization are out of scope.
E may have any size since the algebra is exact and linear.
"""

import logging
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence

from symdeform.errors import InputError, InternalError, PreconditionError
from symdeform.exact.elimination import solve_affine_many
from symdeform.exact.matrix import ExactMatrix
from symdeform.exact.pair import SymPair, sym_dimension, vectorize_sym_pair
from symdeform.exact.scalar import GaussianRational
from symdeform.patterns.pattern import PatternPair, count_parameters, instantiate
from symdeform.tangent import is_miniversal, tangent_perturbation, tangent_vectors

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SliceProjection:
    """Parameter values of the slice representative and a matrix C reaching it."""

    d_values: Dict[int, GaussianRational]
    reducer: ExactMatrix
    residual_check: bool

    def to_dict(self) -> Dict[str, object]:
        return {
            "d_values": {str(k): str(v) for k, v in sorted(self.d_values.items())},
            "reducer": self.reducer.to_strings(),
            "residual_check": self.residual_check,
        }


class SliceProjector:
    """
    Projects perturbations of ``k`` onto the slice of pattern ``p``.

    The unknowns are the n² entries of C (row-major) followed by the
    parameters. One elimination serves every perturbation passed to
    :meth:`project_many`.

    Raises:
        InputError: if the sizes differ
        PreconditionError: if ``p`` is not miniversal for ``k``
    """

    def __init__(
        self, k: SymPair, p: PatternPair, column_order: Optional[Sequence[int]] = None
    ):
        if k.size != p.size:
            raise InputError(f"Pair size {k.size} does not match pattern size {p.size}")
        certificate = is_miniversal(k, p)
        if not certificate.miniversal:
            raise PreconditionError(
                f"Pattern is not miniversal for this pair "
                f"(params {certificate.params}, codim {certificate.codimension}, "
                f"combined rank {certificate.combined_rank} of {certificate.dimension})"
            )
        self.k = k
        self.p = p
        self.column_order = list(column_order) if column_order is not None else None
        self._n = k.size
        self._params = count_parameters(p)
        self._system = self._build_system()

    @property
    def unknowns(self) -> int:
        return self._n * self._n + self._params

    def _build_system(self) -> ExactMatrix:
        """Columns: tangent images of E_kl, then minus the parameter unit vectors."""
        dimension = sym_dimension(self._n)
        tangent = tangent_vectors(self.k)
        minus_one = GaussianRational(Fraction(-1))
        zero = GaussianRational()
        param_rows = {idx: t for t, idx in enumerate(self.p.vector_indices())}
        entries: List[GaussianRational] = []
        for r in range(dimension):
            entries.extend(v[r] for v in tangent)
            row = [zero] * self._params
            if r in param_rows:
                row[param_rows[r]] = minus_one
            entries.extend(row)
        return ExactMatrix(dimension, self.unknowns, tuple(entries))

    def project_many(self, perturbations: Sequence[SymPair]) -> List[SliceProjection]:
        for e in perturbations:
            if e.size != self._n:
                raise InputError(
                    f"Perturbation size {e.size} does not match pair size {self._n}"
                )
        rhs = [tuple(-v for v in vectorize_sym_pair(e)) for e in perturbations]
        solutions = solve_affine_many(self._system, rhs, column_order=self.column_order)

        n2 = self._n * self._n
        results = []
        for e, x in zip(perturbations, solutions):
            if x is None:
                raise InternalError(
                    "Slice projection system is inconsistent for a miniversal pattern"
                )
            reducer = ExactMatrix(self._n, self._n, tuple(x[:n2]))
            d_values = {t: x[n2 + t] for t in range(self._params)}
            residual = instantiate(self.p, d_values) == e + tangent_perturbation(self.k, reducer)
            if not residual:
                logger.error("slice projection residual is nonzero for size-%d pair", self._n)
            results.append(SliceProjection(d_values, reducer, residual))
        logger.debug("projected %d perturbation(s) of size %d", len(results), self._n)
        return results

    def project(self, e: SymPair) -> SliceProjection:
        return self.project_many([e])[0]


def project_to_slice(k: SymPair, e: SymPair, p: PatternPair) -> SliceProjection:
    """Unique pattern-form representative of ``e`` modulo the tangent space of ``k``."""
    return SliceProjector(k, p).project(e)


def project_idempotence_check(k: SymPair, e: SymPair, p: PatternPair) -> bool:
    """Projecting the representative again returns it unchanged."""
    projector = SliceProjector(k, p)
    first = projector.project(e)
    again = projector.project(instantiate(p, first.d_values))
    return again.d_values == first.d_values and tangent_perturbation(k, again.reducer).is_zero()


def random_scalar(rng: random.Random, bound: int = 5, max_den: int = 4) -> GaussianRational:
    """Gaussian rational with small numerators and denominators."""
    re = Fraction(rng.randint(-bound, bound), rng.randint(1, max_den))
    im = Fraction(0)
    if rng.random() < 0.5:
        im = Fraction(rng.randint(-bound, bound), rng.randint(1, max_den))
    return GaussianRational(re, im)


def random_symmetric_pair(n: int, rng: random.Random) -> SymPair:
    """Seeded random symmetric pair of size n."""
    mats = []
    for _ in range(2):
        entries = [GaussianRational()] * (n * n)
        for i in range(n):
            for j in range(i, n):
                entries[i * n + j] = entries[j * n + i] = random_scalar(rng)
        mats.append(ExactMatrix(n, n, tuple(entries)))
    return SymPair(mats[0], mats[1])


def check_projections(k: SymPair, p: PatternPair, samples: int, seed: int) -> Dict[str, object]:
    """
    Run seeded projection checks.

    Each sample is checked for the residual identity, idempotence, agreement
    with a solve using the reversed unknown order, and linearity against the
    previous sample.
    """
    rng = random.Random(seed)
    perturbations = [random_symmetric_pair(k.size, rng) for _ in range(samples)]
    if not perturbations:
        return {
            "samples": 0,
            "residual": True,
            "idempotent": True,
            "unique": True,
            "linear": True,
        }

    projector = SliceProjector(k, p)
    reversed_order = list(reversed(range(projector.unknowns)))
    reversed_projector = SliceProjector(k, p, column_order=reversed_order)
    first = projector.project_many(perturbations)
    second = reversed_projector.project_many(perturbations)
    again = projector.project_many([instantiate(p, proj.d_values) for proj in first])
    sums = projector.project_many(
        [perturbations[t] + perturbations[t - 1] for t in range(1, len(perturbations))]
    )

    residual = all(proj.residual_check for proj in first)
    unique = all(a.d_values == b.d_values for a, b in zip(first, second))
    idempotent = all(
        a.d_values == b.d_values and tangent_perturbation(k, b.reducer).is_zero()
        for a, b in zip(first, again)
    )
    linear = all(
        s.d_values[pid] == first[t + 1].d_values[pid] + first[t].d_values[pid]
        for t, s in enumerate(sums)
        for pid in s.d_values
    )
    return {
        "samples": samples,
        "residual": residual,
        "idempotent": idempotent,
        "unique": unique,
        "linear": linear,
    }
