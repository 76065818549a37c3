"""Hypothesis strategies shared by the test modules."""
from __future__ import annotations

from hypothesis import strategies as st

from partperm.algebra import PartialPermutation, PPElement
from partperm.combinatorics import Permutation


@st.composite
def permutations_on(draw, max_point: int = 6, min_size: int = 0):
    ground = draw(st.sets(st.integers(1, max_point), min_size=min_size))
    ground = sorted(ground)
    images = draw(st.permutations(ground)) if ground else []
    return Permutation(dict(zip(ground, images)))


@st.composite
def pp_elements(draw, max_point: int = 4, max_terms: int = 3):
    keys = draw(st.lists(permutations_on(max_point), max_size=max_terms))
    coeffs = draw(st.lists(st.integers(-3, 3), min_size=len(keys), max_size=len(keys)))
    return PPElement({PartialPermutation(k): c for k, c in zip(keys, coeffs)})
