"""
Fraction-free elimination over the Gaussian integers.

Each row of a matrix over Q(i) is scaled by the common denominator of its
entries, which leaves the row space unchanged, and then reduced with
Bareiss' algorithm. All divisions are exact. When every entry is real the
same code runs on plain ``int`` values.

Rows are kept sparse as ``{column: value}`` dicts.

Pivot rule: columns are visited in the given order (left to right by
default) and the pivot is the first nonzero entry from the top.
"""

import logging
from fractions import Fraction
from math import lcm
from typing import Callable, Dict, List, NamedTuple, Optional, Sequence, Tuple

from symdeform.errors import InputError
from symdeform.exact.matrix import ExactMatrix
from symdeform.exact.scalar import GaussianRational, gr

logger = logging.getLogger(__name__)

Row = Dict[int, object]


class _Ring(NamedTuple):
    one: object
    mul: Callable[[object, object], object]
    sub: Callable[[object, object], object]
    neg: Callable[[object], object]
    div: Callable[[object, object], object]
    to_scalar: Callable[[object], GaussianRational]


def _gmul(x, y):
    a, b = x
    c, d = y
    return (a * c - b * d, a * d + b * c)


def _gsub(x, y):
    return (x[0] - y[0], x[1] - y[1])


def _gneg(x):
    return (-x[0], -x[1])


def _gdiv(x, y):
    a, b = x
    c, d = y
    n = c * c + d * d
    return ((a * c + b * d) // n, (b * c - a * d) // n)


_INT_RING = _Ring(
    one=1,
    mul=lambda x, y: x * y,
    sub=lambda x, y: x - y,
    neg=lambda x: -x,
    div=lambda x, y: x // y,
    to_scalar=lambda x: GaussianRational(Fraction(x), Fraction(0)),
)

_GAUSS_RING = _Ring(
    one=(1, 0),
    mul=_gmul,
    sub=_gsub,
    neg=_gneg,
    div=_gdiv,
    to_scalar=lambda x: GaussianRational(Fraction(x[0]), Fraction(x[1])),
)


def _ring_rows(rows: Sequence[Sequence[GaussianRational]]) -> Tuple[List[Row], _Ring]:
    """Clear denominators row by row and pick the int or Gaussian-int ring."""
    complex_mode = any(not v.is_real for row in rows for v in row)
    ring = _GAUSS_RING if complex_mode else _INT_RING
    out: List[Row] = []
    for row in rows:
        scale = 1
        support = []
        for j, v in enumerate(row):
            if not v.is_zero:
                support.append(j)
                scale = lcm(scale, v.re.denominator, v.im.denominator)
        converted: Row = {}
        for j in support:
            v = row[j]
            re = v.re.numerator * (scale // v.re.denominator)
            if complex_mode:
                im = v.im.numerator * (scale // v.im.denominator)
                converted[j] = (re, im)
            else:
                converted[j] = re
        out.append(converted)
    return out, ring


def _bareiss(rows: List[Row], order: Sequence[int], ring: _Ring) -> List[Tuple[int, int]]:
    """
    Forward Bareiss elimination in place.

    Returns the (row, column) pivots in elimination order. Rows below the
    last pivot row have no entries left in any column of ``order``.
    """
    m = len(rows)
    one = ring.one
    prev = one
    r = 0
    pivots: List[Tuple[int, int]] = []
    for c in order:
        if r == m:
            break
        found = next((i for i in range(r, m) if c in rows[i]), None)
        if found is None:
            continue
        if found != r:
            rows[r], rows[found] = rows[found], rows[r]
        prow = rows[r]
        p = prow[c]
        trivial = p == one and prev == one
        for i in range(r + 1, m):
            row = rows[i]
            f = row.get(c)
            if f is None:
                if not trivial and row:
                    rows[i] = {j: ring.div(ring.mul(p, x), prev) for j, x in row.items()}
                continue
            new: Row = {}
            for j, x in row.items():
                if j not in prow:
                    new[j] = ring.div(ring.mul(p, x), prev)
            for j, y in prow.items():
                x = row.get(j)
                if x is None:
                    v = ring.neg(ring.mul(f, y))
                else:
                    v = ring.sub(ring.mul(p, x), ring.mul(f, y))
                if v != 0 and v != (0, 0):
                    new[j] = ring.div(v, prev)
            rows[i] = new
        pivots.append((r, c))
        prev = p
        r += 1
    return pivots


def _matrix_rows(m: ExactMatrix) -> List[Tuple[GaussianRational, ...]]:
    return [m.row(i) for i in range(m.rows)]


def rank(m: ExactMatrix) -> int:
    """Exact rank over Q(i)."""
    rows, ring = _ring_rows(_matrix_rows(m))
    result = len(_bareiss(rows, range(m.cols), ring))
    logger.debug("rank of %dx%d matrix = %d", m.rows, m.cols, result)
    return result


def rank_of_rows(rows: Sequence[Sequence[GaussianRational]], cols: int) -> int:
    """Rank of a list of coordinate vectors of length ``cols``."""
    ring_rows, ring = _ring_rows(rows)
    return len(_bareiss(ring_rows, range(cols), ring))


def _check_order(order: Optional[Sequence[int]], n: int) -> List[int]:
    if order is None:
        return list(range(n))
    order = list(order)
    if sorted(order) != list(range(n)):
        raise InputError(f"Column order must be a permutation of 0..{n - 1}")
    return order


def pivot_columns(
    rows: Sequence[Sequence[GaussianRational]],
    cols: int,
    column_order: Optional[Sequence[int]] = None,
) -> List[int]:
    """
    Pivot columns found when columns are visited in ``column_order``.

    With the order reversed, a column is a non-pivot exactly when its unit
    vector is independent of the row space plus all earlier unit vectors.
    Greedy pattern construction relies on this.
    """
    order = _check_order(column_order, cols)
    ring_rows, ring = _ring_rows(rows)
    pivots = [c for _, c in _bareiss(ring_rows, order, ring)]
    logger.debug("pivot columns (%d of %d): %s", len(pivots), cols, pivots)
    return pivots


def _as_vector(b: object) -> List[GaussianRational]:
    if isinstance(b, ExactMatrix):
        if b.cols != 1:
            raise InputError(f"Right-hand side must be a column vector, got {b.rows}x{b.cols}")
        return list(b.column(0))
    return [gr(v) for v in b]  # type: ignore[union-attr]


def solve_affine_many(
    a: ExactMatrix,
    bs: Sequence[object],
    column_order: Optional[Sequence[int]] = None,
) -> List[Optional[Tuple[GaussianRational, ...]]]:
    """
    Solve ``a x = b`` for several right-hand sides with one elimination.

    Each result is ``None`` when that system is inconsistent, otherwise the
    solution whose free variables (non-pivot unknowns) are zero.

    Raises:
        InputError: if a right-hand side has the wrong length
    """
    n = a.cols
    order = _check_order(column_order, n)
    vectors = [_as_vector(b) for b in bs]
    for k, vec in enumerate(vectors):
        if len(vec) != a.rows:
            raise InputError(
                f"Right-hand side {k} has length {len(vec)}, matrix has {a.rows} rows"
            )

    augmented = [tuple(a.row(i)) + tuple(vec[i] for vec in vectors) for i in range(a.rows)]
    rows, ring = _ring_rows(augmented)
    pivots = _bareiss(rows, order, ring)
    rank_a = len(pivots)

    results: List[Optional[Tuple[GaussianRational, ...]]] = []
    for t in range(len(vectors)):
        key = n + t
        if any(key in rows[i] for i in range(rank_a, len(rows))):
            results.append(None)
            continue
        x: Dict[int, GaussianRational] = {}
        for r, c in reversed(pivots):
            row = rows[r]
            acc = ring.to_scalar(row[key]) if key in row else GaussianRational()
            for j, coeff in row.items():
                if j != c and j in x:
                    acc = acc - ring.to_scalar(coeff) * x[j]
            x[c] = acc / ring.to_scalar(row[c])
        results.append(tuple(x.get(j, GaussianRational()) for j in range(n)))
    logger.debug(
        "solved %d system(s) with %dx%d matrix, rank %d", len(vectors), a.rows, n, rank_a
    )
    return results


def solve_affine(
    a: ExactMatrix,
    b: object,
    column_order: Optional[Sequence[int]] = None,
) -> Optional[Tuple[GaussianRational, ...]]:
    """
    Solve ``a x = b`` exactly.

    Args:
        a: Coefficient matrix
        b: Right-hand side (sequence of scalars or a one-column matrix)
        column_order: Order in which unknowns are considered for pivots

    Returns:
        A solution with free variables zero, or ``None`` if inconsistent

    Raises:
        InputError: if ``len(b) != a.rows``
    """
    return solve_affine_many(a, [b], column_order=column_order)[0]
