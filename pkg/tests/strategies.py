"""Hypothesis strategies shared by the property suites."""
from hypothesis import strategies as st

from src.models.bicomplex import Bicomplex
from src.models.exactnum import QuadElem

# 256-bit signed integers
big_ints = st.integers(min_value=-(2 ** 255), max_value=2 ** 255 - 1)

small_ints = st.integers(min_value=-1000, max_value=1000)

fractions = st.fractions(max_denominator=10 ** 6)


def quad_elems():
    return st.builds(QuadElem, fractions, fractions)


def nonzero_quad_elems():
    return quad_elems().filter(lambda x: not x.is_zero())


def bicomplex_ints(elements=big_ints):
    return st.builds(Bicomplex, elements, elements, elements, elements)


def bicomplex_quads():
    return st.builds(Bicomplex, quad_elems(), quad_elems(), quad_elems(), quad_elems())


indices = st.integers(min_value=-60, max_value=60)
