"""Hypothesis property tests for the core algebraic invariants."""

import hypothesis.strategies as st
from hypothesis import given, settings

from setfam.family import (
    Family,
    complement_family,
    degree_profile,
    is_s_union,
    is_t_intersecting,
    restrict,
)
from setfam.shifting import fully_shift, is_shifted, shift_once


@st.composite
def families(draw, min_n=2, max_n=8, max_size=10):
    n = draw(st.integers(min_n, max_n))
    masks = draw(st.lists(st.integers(0, (1 << n) - 1), max_size=max_size))
    return Family.of_masks(n, masks)


@given(families(), st.integers(0, 8))
def test_complement_duality(F, t):
    C = complement_family(F)
    assert complement_family(C) == F
    assert len(C) == len(F)
    if t <= F.n:
        assert is_t_intersecting(F, t) == is_s_union(C, F.n - t)


@given(families())
def test_full_shift_reaches_a_fixpoint(F):
    S = fully_shift(F)
    assert is_shifted(S)
    assert len(S) == len(F)
    assert sorted(m.bit_count() for m in S.members) == sorted(
        m.bit_count() for m in F.members
    )
    assert fully_shift(S) == S


@given(families(), st.data())
def test_single_shift_preserves_profile(F, data):
    i = data.draw(st.integers(1, F.n - 1))
    j = data.draw(st.integers(i + 1, F.n))
    S = shift_once(F, i, j)
    assert len(S) == len(F)
    assert sorted(m.bit_count() for m in S.members) == sorted(
        m.bit_count() for m in F.members
    )


@given(families(min_n=2, max_n=7), st.data())
def test_restriction_partition(F, data):
    i = data.draw(st.integers(1, F.n))
    assert len(F) == len(restrict(F, str(i))) + len(restrict(F, f"~{i}"))


@settings(max_examples=200)
@given(families())
def test_diversity_definitions_coincide(F):
    maxdeg, div = degree_profile(F)
    if F.members:
        assert div == min(len(restrict(F, f"~{i}")) for i in range(1, F.n + 1))
        assert maxdeg + div == len(F)
    else:
        assert (maxdeg, div) == (0, 0)
