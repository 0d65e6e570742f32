"""Shared hypothesis strategies."""

from fractions import Fraction

from hypothesis import strategies as st

small_rat = st.builds(Fraction, st.integers(-4, 4), st.integers(1, 3))


def matrices(rows=st.integers(0, 5), cols=st.integers(1, 5), entries=small_rat):
    return st.tuples(rows, cols).flatmap(
        lambda rc: st.lists(st.lists(entries, min_size=rc[1], max_size=rc[1]),
                            min_size=rc[0], max_size=rc[0]).map(
            lambda m: (tuple(tuple(r) for r in m), rc[1])))


def square_ops(n, max_ops=3, entries=st.integers(-2, 2)):
    row = st.lists(entries, min_size=n, max_size=n).map(tuple)
    op = st.lists(row, min_size=n, max_size=n).map(tuple)
    return st.lists(op, min_size=0, max_size=max_ops)
