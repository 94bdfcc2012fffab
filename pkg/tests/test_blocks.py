"""Tests for the canonical summands."""

import pytest

from symdeform.blocks import assemble, delta_matrix, fg_matrices, lambda_matrix, make_block
from symdeform.core import BlockSpec, CanonicalStructure
from symdeform.errors import SizeError
from symdeform.exact import ExactMatrix, SymPair, gr


def rows(m: ExactMatrix):
    return m.to_strings()


def test_lambda_matrix():
    assert rows(lambda_matrix(1, 2)) == [["2"]]
    assert rows(lambda_matrix(2, "1/2")) == [["0", "1/2"], ["1/2", "1"]]
    assert rows(lambda_matrix(3, 0)) == [["0", "0", "0"], ["0", "0", "1"], ["0", "1", "0"]]
    with pytest.raises(SizeError):
        lambda_matrix(0, 1)


def test_delta_matrix():
    assert rows(delta_matrix(1)) == [["1"]]
    assert rows(delta_matrix(2)) == [["0", "1"], ["1", "0"]]
    for n in range(1, 5):
        d = delta_matrix(n)
        assert d @ d == ExactMatrix.identity(n)
    with pytest.raises(SizeError):
        delta_matrix(0)


def test_fg_matrices():
    f, g = fg_matrices(1)
    assert rows(f) == [["1", "0"]]
    assert rows(g) == [["0", "1"]]
    f, g = fg_matrices(2)
    assert rows(f) == [["1", "0", "0"], ["0", "1", "0"]]
    assert rows(g) == [["0", "1", "0"], ["0", "0", "1"]]
    f, g = fg_matrices(0)
    assert f.shape == g.shape == (0, 1)


def test_make_block():
    assert make_block(BlockSpec.h(1, 2)) == SymPair.from_rows([[1]], [[2]])
    assert make_block(BlockSpec.k(2)) == SymPair.from_rows([[0, 0], [0, 1]], [[0, 1], [1, 0]])
    assert make_block(BlockSpec.l(1)) == SymPair.from_rows(
        [[0, 0, 1], [0, 0, 0], [1, 0, 0]],
        [[0, 0, 0], [0, 0, 1], [0, 1, 0]],
    )
    assert make_block(BlockSpec.l(0)) == SymPair.zero(1)


@pytest.mark.parametrize(
    "spec",
    [BlockSpec.h(3, "1+1i"), BlockSpec.k(4), BlockSpec.l(2), BlockSpec.l(3)],
)
def test_blocks_are_symmetric_pairs_of_the_right_size(spec):
    pair = make_block(spec)
    assert pair.a.is_symmetric() and pair.b.is_symmetric()
    assert pair.size == spec.size


def test_assemble():
    assert assemble(CanonicalStructure.of(BlockSpec.h(1, 2))) == SymPair.from_rows([[1]], [[2]])
    assert assemble(CanonicalStructure.of(BlockSpec.h(1, 0), BlockSpec.k(1))) == SymPair.from_rows(
        [[1, 0], [0, 0]], [[0, 0], [0, 1]]
    )
    assert assemble(CanonicalStructure(())).size == 0


def test_assemble_places_blocks_in_order():
    pair = assemble(CanonicalStructure.of(BlockSpec.k(1), BlockSpec.h(2, gr(3))))
    assert pair.a.submatrix(1, 3, 1, 3) == delta_matrix(2)
    assert pair.b.submatrix(1, 3, 1, 3) == lambda_matrix(2, 3)
    assert pair.b[0, 0] == 1


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_k_block_is_swapped_h_block_at_zero(n):
    assert make_block(BlockSpec.k(n)) == make_block(BlockSpec.h(n, 0)).swap()


@pytest.mark.parametrize(
    "left,right",
    [
        ("H(2,1),L(1)", "K(2),H(1,1+1i)"),
        ("L(0)", "L(2),K(1)"),
        ("[]", "H(3,-1/2)"),
        ("K(1)", "[]"),
    ],
)
def test_assemble_of_concatenation_is_direct_sum(left, right):
    s1 = CanonicalStructure.from_text(left)
    s2 = CanonicalStructure.from_text(right)
    assert assemble(s1 + s2) == assemble(s1).direct_sum(assemble(s2))
