from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from splinereg.ratlinalg import RatMatrix, in_column_span, pivot_rows, rank


def power_basis_matrix(r, slopes, d):
    """Columns: (x + c z)^{r+1} times the degree-(d-r-1) monomials, rows in
    lex-descending order x^d, x^{d-1} z, ..., z^d."""
    from math import comb

    cols = []
    for c in slopes:
        for k in range(d - r):
            col = [Fraction(0)] * (d + 1)
            for m in range(r + 2):
                col[m + k] = Fraction(comb(r + 1, m)) * Fraction(c) ** m
            cols.append(col)
    ent = tuple(cols[j][i] for i in range(d + 1) for j in range(len(cols)))
    return RatMatrix(d + 1, len(cols), ent)


def test_rank_identity():
    assert rank(RatMatrix.identity(2)) == 2


def test_rank_zero_matrix():
    assert rank(RatMatrix.zero(3, 4)) == 0


def test_rank_power_matrix_two_quadrics():
    # x^2 and (x+z)^2 in degree 2 are independent
    m = power_basis_matrix(1, [0, 1], 2)
    assert m.cols == 2
    assert rank(m) == 2


def test_pivot_rows_identity():
    assert pivot_rows(RatMatrix.identity(3)) == [0, 1, 2]


def test_pivot_rows_single_column():
    m = RatMatrix.from_rows([[0], [1], [0]])
    assert pivot_rows(m) == [1]


def test_pivot_rows_power_matrix_degree9():
    # degree r+1 slice for slopes {0, 1}: leading monomials x^9 and x^8 z
    m = power_basis_matrix(8, [0, 1], 9)
    assert pivot_rows(m) == [0, 1]


def test_in_column_span_identity():
    assert in_column_span(RatMatrix.identity(2), [3, 5])


def test_in_column_span_single_column():
    basis = RatMatrix.from_rows([[1], [0]])
    assert not in_column_span(basis, [0, 1])


def test_in_column_span_xz_not_in_x_squared():
    # degree-2 slice of <x^2> in (x, z): only x^2 itself
    basis = RatMatrix.from_rows([[1], [0], [0]])
    xz = [0, 1, 0]
    assert not in_column_span(basis, xz)


def test_vector_length_mismatch():
    with pytest.raises(ValueError):
        in_column_span(RatMatrix.identity(2), [1, 2, 3])


small_fraction = st.fractions(
    min_value=-4, max_value=4, max_denominator=3
)


@st.composite
def small_matrix(draw):
    rows = draw(st.integers(1, 5))
    cols = draw(st.integers(1, 5))
    data = draw(
        st.lists(
            st.lists(small_fraction, min_size=cols, max_size=cols),
            min_size=rows,
            max_size=rows,
        )
    )
    return RatMatrix.from_rows(data)


@settings(max_examples=60, deadline=None)
@given(small_matrix())
def test_rank_equals_transpose_rank(m):
    assert rank(m) == rank(m.transpose())


@settings(max_examples=60, deadline=None)
@given(small_matrix(), st.randoms(use_true_random=False))
def test_rank_invariant_under_row_permutation_and_scaling(m, rng):
    perm = list(range(m.rows))
    rng.shuffle(perm)
    scale = [Fraction(rng.choice([1, 2, 3, -1, -5]), rng.choice([1, 2])) for _ in perm]
    rows = [[scale[i] * v for v in m.row(perm[i])] for i in range(m.rows)]
    assert rank(RatMatrix.from_rows(rows)) == rank(m)


@settings(max_examples=60, deadline=None)
@given(small_matrix())
def test_pivot_count_is_rank(m):
    assert len(pivot_rows(m)) == rank(m)


@settings(max_examples=60, deadline=None)
@given(small_matrix(), st.lists(small_fraction, min_size=1, max_size=5))
def test_span_membership_matches_rank_test(m, vec):
    vec = (vec * 5)[: m.rows]
    aug = m.hstack(RatMatrix(m.rows, 1, tuple(Fraction(v) for v in vec)))
    assert in_column_span(m, vec) == (rank(aug) == rank(m))
