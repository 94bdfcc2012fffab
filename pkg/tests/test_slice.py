"""Tests for first-order slice projection."""

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from symdeform.blocks import assemble, make_block
from symdeform.core import BlockSpec, CanonicalStructure
from symdeform.errors import InputError, PreconditionError
from symdeform.exact import ExactMatrix, SymPair, gr
from symdeform.patterns import PatternPair, assemble_pattern, instantiate
from symdeform.slice import (
    SliceProjector,
    check_projections,
    project_idempotence_check,
    project_to_slice,
    random_symmetric_pair,
)
from symdeform.tangent import tangent_perturbation

H1 = make_block(BlockSpec.h(1, 0))
H1_PATTERN = assemble_pattern(CanonicalStructure.of(BlockSpec.h(1, 0)))


def test_projection_examples():
    result = project_to_slice(H1, SymPair.from_rows([[4]], [[6]]), H1_PATTERN)
    assert result.d_values == {0: gr(6)}
    assert result.reducer == ExactMatrix.from_rows([[-2]])
    assert result.residual_check

    result = project_to_slice(H1, SymPair.from_rows([[0]], [[7]]), H1_PATTERN)
    assert result.d_values == {0: gr(7)}
    assert result.reducer.is_zero()

    result = project_to_slice(H1, SymPair.from_rows([[4]], [[0]]), H1_PATTERN)
    assert result.d_values == {0: gr(0)}


def test_zero_perturbation_projects_to_zero():
    s = CanonicalStructure.from_text("K(1),L(1)")
    result = project_to_slice(assemble(s), SymPair.zero(4), assemble_pattern(s))
    assert all(v.is_zero for v in result.d_values.values())


def test_residual_identity_holds():
    s = CanonicalStructure.from_text("H(2,1),H(1,1)")
    k, p = assemble(s), assemble_pattern(s)
    e = random_symmetric_pair(3, random.Random(5))
    result = project_to_slice(k, e, p)
    assert instantiate(p, result.d_values) == e + tangent_perturbation(k, result.reducer)


def test_idempotence():
    s = CanonicalStructure.from_text("L(1)")
    e = random_symmetric_pair(3, random.Random(11))
    assert project_idempotence_check(assemble(s), e, assemble_pattern(s))


def test_rejects_non_miniversal_pattern():
    with pytest.raises(PreconditionError):
        project_to_slice(H1, SymPair.zero(1), PatternPair.from_params(1, [(0, 0, 0)]))


def test_size_mismatch():
    projector = SliceProjector(H1, H1_PATTERN)
    with pytest.raises(InputError):
        projector.project(SymPair.zero(2))
    with pytest.raises(InputError):
        SliceProjector(H1, PatternPair.empty(2))


def test_unknown_count():
    s = CanonicalStructure.from_text("K(1),L(0)")
    projector = SliceProjector(assemble(s), assemble_pattern(s))
    assert projector.unknowns == 4 + 4


@pytest.mark.parametrize("text", ["H(1,1+1i),H(2,1+1i)", "K(1),L(1)", "L(0),L(1)"])
def test_check_projections(text):
    s = CanonicalStructure.from_text(text)
    checks = check_projections(assemble(s), assemble_pattern(s), samples=3, seed=7)
    assert checks == {
        "samples": 3,
        "residual": True,
        "idempotent": True,
        "unique": True,
        "linear": True,
    }


def test_check_projections_without_samples():
    assert check_projections(H1, H1_PATTERN, samples=0, seed=0)["samples"] == 0


def test_random_pairs_are_seeded():
    assert random_symmetric_pair(3, random.Random(3)) == random_symmetric_pair(3, random.Random(3))


@settings(max_examples=15, deadline=None)
@given(st.integers(min_value=0, max_value=10_000), st.integers(min_value=0, max_value=10_000))
def test_projection_is_linear(seed_a, seed_b):
    s = CanonicalStructure.from_text("H(1,0),K(1)")
    k, p = assemble(s), assemble_pattern(s)
    e1 = random_symmetric_pair(2, random.Random(seed_a))
    e2 = random_symmetric_pair(2, random.Random(seed_b))
    projector = SliceProjector(k, p)
    d1, d2, d12 = (r.d_values for r in projector.project_many([e1, e2, e1 + e2]))
    assert all(d12[pid] == d1[pid] + d2[pid] for pid in d12)
