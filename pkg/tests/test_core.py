"""Tests for core data structures."""

import pytest

from symdeform.core import BlockKind, BlockSpec, CanonicalStructure
from symdeform.errors import InputError, ParseError
from symdeform.exact.scalar import gr


def test_block_creation():
    """Test creating blocks of each kind."""
    h = BlockSpec.h(2, "1/2")
    assert h.kind is BlockKind.H
    assert h.lam == gr("1/2")
    assert h.size == 2
    assert h.label == "H(2,1/2)"

    assert BlockSpec.k(3).size == 3
    assert BlockSpec.l(0).size == 1
    assert BlockSpec.l(2).size == 5


def test_block_validation():
    with pytest.raises(InputError):
        BlockSpec.h(0, 1)
    with pytest.raises(InputError):
        BlockSpec(BlockKind.H, 1)
    with pytest.raises(InputError):
        BlockSpec(BlockKind.K, 1, gr(2))
    with pytest.raises(InputError):
        BlockSpec.l(-1)
    with pytest.raises(InputError):
        BlockSpec("X", 1)


def test_structure_offsets_and_size():
    s = CanonicalStructure.of(BlockSpec.h(2, 0), BlockSpec.l(1), BlockSpec.k(1))
    assert s.size == 6
    assert s.offsets() == [0, 2, 5]
    assert len(s) == 3
    assert s.label == "H(2,0),L(1),K(1)"


def test_structure_permuted():
    s = CanonicalStructure.of(BlockSpec.h(1, 0), BlockSpec.k(2))
    assert s.permuted([1, 0]).blocks == (BlockSpec.k(2), BlockSpec.h(1, 0))
    with pytest.raises(InputError):
        s.permuted([0, 0])


@pytest.mark.parametrize(
    "text,label",
    [
        ("H(1,2)", "H(1,2)"),
        ("[H(2,1/2), K(1), L(0)]", "H(2,1/2),K(1),L(0)"),
        ("h(1,1+1i)", "H(1,1+1i)"),
        ("[]", "[]"),
        ("", "[]"),
    ],
)
def test_structure_from_text(text, label):
    assert CanonicalStructure.from_text(text).label == label


def test_structure_from_text_errors_carry_position():
    with pytest.raises(ParseError) as exc:
        CanonicalStructure.from_text("H(1,2),Q(3)")
    assert exc.value.position == 7

    with pytest.raises(ParseError):
        CanonicalStructure.from_text("H(2)")
    with pytest.raises(ParseError):
        CanonicalStructure.from_text("K(1,3)")
    with pytest.raises(ParseError):
        CanonicalStructure.from_text("H(1,1/0)")

    # non-ASCII digits are rejected, not passed on to int()
    with pytest.raises(ParseError) as exc:
        CanonicalStructure.from_text("H(1,²)")
    assert exc.value.position == 4
    with pytest.raises(ParseError) as exc:
        CanonicalStructure.from_text("K(²)")
    assert exc.value.position == 0


def test_structure_dict_round_trip():
    s = CanonicalStructure.of(BlockSpec.h(2, "-1+2i"), BlockSpec.l(0))
    data = s.to_dict()
    assert data["blocks"][0] == {"kind": "H", "n": 2, "lambda": "-1+2i"}
    assert CanonicalStructure.from_dict(data) == s


def test_structure_from_dict_rejects_bad_input():
    with pytest.raises(InputError):
        CanonicalStructure.from_dict({"items": []})
    with pytest.raises(InputError):
        CanonicalStructure.from_dict({"blocks": [{"kind": "K"}]})
