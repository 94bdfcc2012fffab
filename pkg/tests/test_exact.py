"""Tests for exact Q(i) arithmetic, matrices, pairs and elimination."""

from fractions import Fraction
from itertools import combinations

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from symdeform.errors import InputError, InvariantError, ParseError, SizeError
from symdeform.exact import (
    ExactMatrix,
    GaussianRational,
    SymPair,
    gr,
    pivot_columns,
    rank,
    solve_affine,
    sym_dimension,
    unvectorize_sym_pair,
    vector_index,
    vectorize_sym_pair,
)
from symdeform.exact.scalar import I, ONE, ZERO

small = st.integers(min_value=-4, max_value=4)
dens = st.integers(min_value=1, max_value=3)

real_scalars = st.builds(lambda a, b: GaussianRational(Fraction(a, b)), small, dens)
complex_scalars = st.builds(
    lambda a, b, c, d: GaussianRational(Fraction(a, b), Fraction(c, d)), small, dens, small, dens
)
# mostly zeros so that rank deficiency actually shows up
sparse_scalars = st.one_of(st.just(ZERO), st.just(ZERO), real_scalars, complex_scalars)


@st.composite
def matrices(draw, scalars=sparse_scalars, max_dim=4):
    rows = draw(st.integers(min_value=1, max_value=max_dim))
    cols = draw(st.integers(min_value=1, max_value=max_dim))
    entries = draw(st.lists(scalars, min_size=rows * cols, max_size=rows * cols))
    return ExactMatrix(rows, cols, tuple(entries))


@st.composite
def sym_pairs(draw, n, scalars=complex_scalars):
    mats = []
    for _ in range(2):
        upper = {(i, j): draw(scalars) for i in range(n) for j in range(i, n)}
        rows = [[upper[min(i, j), max(i, j)] for j in range(n)] for i in range(n)]
        mats.append(ExactMatrix.from_rows(rows, n))
    return SymPair(mats[0], mats[1])


def laplace_det(rows):
    if not rows:
        return 1
    return sum(
        (-1) ** j * rows[0][j] * laplace_det([r[:j] + r[j + 1 :] for r in rows[1:]])
        for j in range(len(rows)) if rows[0][j]
    )


def minor_rank(rows):
    """Size of the largest nonsingular square submatrix."""
    r, c = len(rows), len(rows[0])
    for k in range(min(r, c), 0, -1):
        for rs in combinations(range(r), k):
            for cs in combinations(range(c), k):
                if laplace_det([[rows[i][j] for j in cs] for i in rs]):
                    return k
    return 0


def to_sympy(m: ExactMatrix) -> sympy.Matrix:
    def conv(v: GaussianRational):
        return sympy.Rational(v.re.numerator, v.re.denominator) + sympy.I * sympy.Rational(
            v.im.numerator, v.im.denominator
        )

    return sympy.Matrix(m.rows, m.cols, [conv(v) for v in m.entries])


class TestScalar:
    @pytest.mark.parametrize(
        "text,re,im",
        [
            ("3", Fraction(3), Fraction(0)),
            ("-1/2", Fraction(-1, 2), Fraction(0)),
            ("2i", Fraction(0), Fraction(2)),
            ("i", Fraction(0), Fraction(1)),
            ("-i", Fraction(0), Fraction(-1)),
            ("1/2-3/4i", Fraction(1, 2), Fraction(-3, 4)),
            ("1+1i", Fraction(1), Fraction(1)),
            ("2/4", Fraction(1, 2), Fraction(0)),
        ],
    )
    def test_parse(self, text, re, im):
        value = GaussianRational.parse(text)
        assert (value.re, value.im) == (re, im)

    @pytest.mark.parametrize(
        "text,position",
        [("", 0), ("1/", 2), ("1/0", 2), ("1+2", 3), ("3x", 1), ("²", 0), ("1/²", 2)],
    )
    def test_parse_errors(self, text, position):
        with pytest.raises(ParseError) as exc:
            GaussianRational.parse(text)
        assert exc.value.position == position

    def test_text_form(self):
        assert str(gr("1/2-3/4i")) == "1/2-3/4i"
        assert str(gr("-1/2i")) == "-1/2i"
        assert str(ZERO) == "0"
        assert repr(I) == "GaussianRational('1i')"

    def test_arithmetic(self):
        assert (ONE + I) * (ONE - I) == 2
        assert (ONE + I) / (ONE - I) == I
        assert I * I == -1
        assert gr("1/2") + Fraction(1, 2) == 1
        assert 3 - gr("1/2") == gr("5/2")
        assert gr("2+2i").conjugate() == gr("2-2i")
        assert gr("3+4i").norm() == 25
        with pytest.raises(ZeroDivisionError):
            ONE / ZERO

    def test_hash_matches_fraction_for_reals(self):
        assert hash(gr("1/2")) == hash(Fraction(1, 2))
        assert len({gr(1), gr("2/2"), ONE}) == 1

    @given(complex_scalars, complex_scalars, complex_scalars)
    def test_field_laws(self, a, b, c):
        assert a * (b + c) == a * b + a * c
        assert (a + b) - b == a
        if not b.is_zero:
            assert (a / b) * b == a


class TestMatrix:
    def test_shapes(self):
        with pytest.raises(SizeError):
            ExactMatrix(2, 2, (ONE,))
        with pytest.raises(SizeError):
            ExactMatrix.from_rows([[1, 2], [3]])
        assert ExactMatrix.from_rows([], cols=3).shape == (0, 3)

    def test_products_and_stacks(self):
        a = ExactMatrix.from_rows([[1, 2], [3, 4]])
        assert a @ ExactMatrix.identity(2) == a
        assert (a @ a).to_strings() == [["7", "10"], ["15", "22"]]
        assert a.T.to_strings() == [["1", "3"], ["2", "4"]]
        assert ExactMatrix.hstack([a, a]).shape == (2, 4)
        assert ExactMatrix.vstack([a, a]).shape == (4, 2)
        assert ExactMatrix.block_diag([a, ExactMatrix.identity(1)]).shape == (3, 3)
        assert a.submatrix(1, 2, 0, 2).to_strings() == [["3", "4"]]
        with pytest.raises(InputError):
            a @ ExactMatrix.zeros(3, 1)

    def test_elementary(self):
        e = ExactMatrix.elementary(2, 3, 1, 2)
        assert e.nonzero_positions() == [(1, 2)]
        with pytest.raises(InputError):
            ExactMatrix.elementary(2, 2, 2, 0)


class TestRank:
    def test_examples(self):
        assert rank(ExactMatrix.identity(3)) == 3
        assert rank(ExactMatrix.from_rows([[1, 2], [2, 4]])) == 1
        assert rank(ExactMatrix.from_rows([[0, 0], [0, 1]])) == 1
        assert rank(ExactMatrix.zeros(2, 3)) == 0
        assert rank(ExactMatrix.from_rows([[1, "i"], ["i", -1]])) == 1

    @settings(max_examples=60, deadline=None)
    @given(matrices())
    def test_rank_matches_sympy(self, m):
        assert rank(m) == to_sympy(m).rank()

    @settings(max_examples=60, deadline=None)
    @given(matrices(scalars=st.one_of(st.just(ZERO), real_scalars)))
    def test_rank_of_real_matrices_matches_sympy(self, m):
        assert rank(m) == to_sympy(m).rank()

    @settings(max_examples=60, deadline=None)
    @given(matrices())
    def test_rank_equals_transpose_rank(self, m):
        assert rank(m) == rank(m.transpose())

    @settings(max_examples=80, deadline=None)
    @given(
        st.integers(min_value=1, max_value=4).flatmap(
            lambda r: st.integers(min_value=1, max_value=4).flatmap(
                lambda c: st.lists(
                    st.lists(st.integers(min_value=-2, max_value=2), min_size=c, max_size=c),
                    min_size=r,
                    max_size=r,
                )
            )
        )
    )
    def test_rank_matches_minor_expansion(self, rows):
        assert rank(ExactMatrix.from_rows(rows)) == minor_rank(rows)

    def test_pivot_columns_follow_order(self):
        rows = [(ONE, ONE, ZERO)]
        assert pivot_columns(rows, 3) == [0]
        assert pivot_columns(rows, 3, [2, 1, 0]) == [1]
        with pytest.raises(InputError):
            pivot_columns(rows, 3, [0, 1])


class TestSolve:
    def test_examples(self):
        assert solve_affine(ExactMatrix.from_rows([[2]]), [6]) == (gr(3),)
        assert solve_affine(ExactMatrix.from_rows([[1, 1]]), [5]) == (gr(5), ZERO)
        assert solve_affine(ExactMatrix.from_rows([[0]]), [1]) is None

    def test_length_mismatch(self):
        with pytest.raises(InputError):
            solve_affine(ExactMatrix.from_rows([[1, 1]]), [1, 2])

    def test_column_vector_rhs(self):
        a = ExactMatrix.from_rows([[1, 0], [0, "i"]])
        b = ExactMatrix.from_rows([["2"], ["1"]])
        assert solve_affine(a, b) == (gr(2), gr("-i"))

    @settings(max_examples=50, deadline=None)
    @given(matrices(), st.data())
    def test_consistent_systems_are_solved(self, a, data):
        x0 = data.draw(st.lists(complex_scalars, min_size=a.cols, max_size=a.cols))
        b = a @ ExactMatrix(a.cols, 1, tuple(x0))
        x = solve_affine(a, b)
        assert x is not None
        assert a @ ExactMatrix(a.cols, 1, x) == b


class TestSymPair:
    def test_invariants(self):
        with pytest.raises(InvariantError):
            SymPair.from_rows([[1, 2], [3, 4]], [[0, 0], [0, 0]])
        with pytest.raises(InvariantError):
            SymPair(ExactMatrix.identity(2), ExactMatrix.identity(3))
        with pytest.raises(InvariantError):
            SymPair(ExactMatrix.zeros(1, 2), ExactMatrix.zeros(1, 2))

    def test_vectorize_examples(self):
        assert vectorize_sym_pair(SymPair.from_rows([[4]], [[6]])) == (gr(4), gr(6))
        pair = SymPair.from_rows([[1, 2], [2, 3]], [[4, 5], [5, 6]])
        assert len(vectorize_sym_pair(pair)) == sym_dimension(2) == 6
        assert all(v.is_zero for v in vectorize_sym_pair(SymPair.zero(3)))
        assert unvectorize_sym_pair(vectorize_sym_pair(pair), 2) == pair

    @settings(max_examples=40, deadline=None)
    @given(
        st.integers(min_value=1, max_value=3).flatmap(
            lambda n: st.tuples(sym_pairs(n), sym_pairs(n))
        ),
        complex_scalars,
    )
    def test_vectorize_is_linear(self, pairs, c):
        p, q = pairs
        combined = vectorize_sym_pair(p.scale(c) + q)
        expected = [c * x + y for x, y in zip(vectorize_sym_pair(p), vectorize_sym_pair(q))]
        assert combined == tuple(expected)

    def test_vector_index(self):
        # n = 3: A has coordinates 0..5, B 6..11
        assert vector_index(3, 0, 0, 0) == 0
        assert vector_index(3, 0, 1, 1) == 3
        assert vector_index(3, 0, 2, 1) == vector_index(3, 0, 1, 2) == 4
        assert vector_index(3, 1, 2, 2) == 11

    def test_unvectorize_wrong_length(self):
        with pytest.raises(SizeError):
            unvectorize_sym_pair([1, 2, 3], 2)

    def test_congruence_and_direct_sum(self):
        pair = SymPair.from_rows([[1]], [[0]])
        assert pair.congruence(ExactMatrix.from_rows([[2]])) == SymPair.from_rows([[4]], [[0]])
        total = pair.direct_sum(SymPair.from_rows([[0]], [[1]]))
        assert total == SymPair.from_rows([[1, 0], [0, 0]], [[0, 0], [0, 1]])
        assert total.swap().a == total.b
