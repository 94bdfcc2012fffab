"""Tests for catalog validation and the discrepancy ledger."""

import logging

import pytest

from symdeform.blocks import assemble
from symdeform.core import CanonicalStructure
from symdeform.ledger import resolve_pattern
from symdeform.patterns.shapes import _SHAPE_REGISTRY, ShapeKind, register_shape
from symdeform.tangent import is_miniversal


@pytest.fixture
def broken_nw_single():
    register_shape(ShapeKind.NW_SINGLE, "broken", lambda rows, cols: frozenset())
    yield {"nw_single": "broken"}
    _SHAPE_REGISTRY.pop((ShapeKind.NW_SINGLE, "broken"), None)


@pytest.mark.parametrize("text", ["H(2,1),H(1,1),K(1)", "K(2),L(1)", "L(1),L(1)", "H(1,0),L(0)"])
def test_catalog_needs_no_substitution(text):
    resolution = resolve_pattern(CanonicalStructure.from_text(text))
    assert resolution.clean
    assert resolution.ledger == []


def test_failing_block_is_substituted_and_recorded(broken_nw_single, caplog):
    s = CanonicalStructure.from_text("H(1,1),H(1,1)")
    with caplog.at_level(logging.WARNING, logger="symdeform"):
        resolution = resolve_pattern(s, broken_nw_single)

    assert not resolution.clean
    [entry] = resolution.ledger
    assert (entry.i, entry.j) == (0, 1)
    assert entry.catalog_params == 0
    assert entry.expected_params == 1
    assert entry.failing_structure.label == "H(1,1),H(1,1)"
    assert entry.to_dict()["substituted"] == ["A[1,1]"]
    assert is_miniversal(assemble(s), resolution.pattern)
    assert "not miniversal" in caplog.text


def test_only_failing_blocks_are_touched(broken_nw_single):
    s = CanonicalStructure.from_text("K(1),H(1,2),H(1,2)")
    resolution = resolve_pattern(s, broken_nw_single)
    assert [(e.i, e.j) for e in resolution.ledger] == [(1, 2)]
    # the K diagonal star is kept as in the catalog
    assert (0, 0) in resolution.pattern.mask_a.stars
    assert is_miniversal(assemble(s), resolution.pattern)
