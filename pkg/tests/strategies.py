"""Hypothesis strategies for workbench values, kept deliberately small."""

from hypothesis import strategies as st

from pbwlab.cyclic import CyclicWord, Potential
from pbwlab.freealg import NCPoly
from pbwlab.presentations import LieData, QuadData
from pbwlab.scalars import HPoly, HRat


def rationals(bound=4, max_denominator=3):
    return st.fractions(min_value=-bound, max_value=bound,
                        max_denominator=max_denominator)


def hpolys(max_degree=3, bound=3):
    return st.lists(rationals(bound), min_size=0, max_size=max_degree + 1).map(HPoly)


def nonzero_hpolys(max_degree=3, bound=3):
    return hpolys(max_degree, bound).filter(bool)


def hrats(max_degree=2, bound=2):
    return st.tuples(hpolys(max_degree, bound),
                     nonzero_hpolys(max_degree, bound)).map(lambda t: HRat(*t))


def words(n, max_len=4):
    return st.lists(st.integers(1, n), min_size=0, max_size=max_len).map(tuple)


def nonempty_words(n, max_len=5):
    return st.lists(st.integers(1, n), min_size=1, max_size=max_len).map(tuple)


def ncpolys(n, max_terms=4, max_len=3, max_hdeg=2):
    return st.dictionaries(words(n, max_len), hpolys(max_hdeg), max_size=max_terms) \
        .map(lambda d: NCPoly(n, d))


def potentials(n, max_terms=3, max_len=5, h_divisible=False):
    coeff = hpolys(max_degree=2)
    if h_divisible:
        coeff = hpolys(max_degree=1).map(lambda p: p * HPoly.h())
    return st.dictionaries(
        nonempty_words(n, max_len).map(lambda w: CyclicWord(n, w)),
        coeff, max_size=max_terms).map(lambda d: Potential(n, d))


def lie_datas(n, max_entries=4, bound=2):
    keys = st.tuples(st.integers(1, max(n - 1, 1)), st.integers(1, n), st.integers(1, n)) \
        .filter(lambda t: t[0] < t[1])
    return st.dictionaries(keys, rationals(bound, 2), max_size=max_entries) \
        .map(lambda d: LieData(n, {k: v for k, v in d.items() if v}))


def quad_datas(n, max_entries=4, bound=2):
    keys = st.tuples(st.integers(1, max(n - 1, 1)), st.integers(1, n),
                     st.integers(1, n), st.integers(1, n)) \
        .filter(lambda t: t[0] < t[1])
    return st.dictionaries(keys, rationals(bound, 2), max_size=max_entries) \
        .map(lambda d: QuadData(n, {k: v for k, v in d.items() if v}))
