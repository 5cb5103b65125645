"""Hypothesis strategies for random complexes."""

from hypothesis import strategies as st

from mnfcomplex import MnfComplex
from mnfcomplex.complex import minimal_sets


@st.composite
def complexes(draw, max_n=7, min_n=1, max_m=8):
    n = draw(st.integers(min_n, max_n))
    if n < 2:
        return MnfComplex(n, ())
    raw = draw(st.lists(st.integers(1, (1 << n) - 1), max_size=max_m))
    masks = minimal_sets(x for x in raw if x.bit_count() >= 2)
    return MnfComplex.from_masks(n, masks)
