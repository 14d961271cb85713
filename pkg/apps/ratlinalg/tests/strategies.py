"""Hypothesis strategies for exact rational data, shared by the app test suites."""

from hypothesis import strategies as st

from apps.ratlinalg.linalg import as_matrix, as_vector

scalars = st.fractions(min_value=-5, max_value=5, max_denominator=6)
small_integers = st.integers(min_value=-3, max_value=3)


def vectors(n, elements=scalars):
    return st.lists(elements, min_size=n, max_size=n).map(as_vector)


def matrices(rows, cols, elements=scalars):
    return st.lists(
        st.lists(elements, min_size=cols, max_size=cols),
        min_size=rows,
        max_size=rows,
    ).map(lambda data: as_matrix(data, cols=cols))


@st.composite
def shaped_matrices(draw, max_rows=5, max_cols=5, elements=small_integers):
    rows = draw(st.integers(min_value=1, max_value=max_rows))
    cols = draw(st.integers(min_value=1, max_value=max_cols))
    return draw(matrices(rows, cols, elements))
