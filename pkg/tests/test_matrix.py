from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import naive_rc
from skewlin import Matrix, Quaternion, conj_matrix, cr_mul, identity, opposite_mul, rc_mul, submatrix, transpose
from skewlin.matrix import DimensionError, check_index_set, hstack, scale_left, scale_right, vstack, zeros
from strategies import matrices, quaternions, rational_matrices

i, j, k = Quaternion(0, 1), Quaternion(0, 0, 1), Quaternion(0, 0, 0, 1)
b = 1 + k


def Q(grid):
    return Matrix(grid, "quaternion")


def test_rational_product_by_hand():
    A = Matrix([[1, 2], [3, 4]])
    B = Matrix([[5, 6], [7, 8]])
    assert rc_mul(A, B) == Matrix([[19, 22], [43, 50]])
    assert A @ B == rc_mul(A, B)


def test_single_entry_products():
    assert rc_mul(Q([[j]]), Q([[b]])) == Q([[j + i]])
    assert cr_mul(Q([[j]]), Q([[b]])) == Q([[b * j]]) == Q([[j - i]])


def test_cr_product_sums_b_times_a():
    A = Q([[i, j]])
    B = Q([[k], [1 + i]])
    assert cr_mul(A, B)[0, 0] == k * i + (1 + i) * j


def test_identity_is_neutral_for_both_products():
    A = Q([[1, b], [j, k]])
    I = identity(2)
    assert rc_mul(A, I) == rc_mul(I, A) == A
    assert cr_mul(A, I) == cr_mul(I, A) == A


def test_dimension_mismatch():
    with pytest.raises(DimensionError):
        rc_mul(Matrix([[1, 2]]), Matrix([[1, 2]]))
    with pytest.raises(DimensionError):
        Matrix([[1, 2], [3]])


def test_empty_shapes_are_legal():
    A = Matrix([], rows=0, cols=3)
    B = Matrix([[]] * 3, rows=3, cols=0)
    assert rc_mul(A, B).shape == (0, 0)
    assert rc_mul(B, A) == zeros(3, 3)


def test_transpose_and_conj_basics():
    I = identity(3)
    assert transpose(I) == I
    R = Matrix([[1, Fraction(2, 3)], [4, 5]])
    assert conj_matrix(R) == R
    A = Q([[i, b]])
    assert conj_matrix(A) == Q([[-i, 1 - k]])
    assert A.T.shape == (2, 1)


def test_submatrix_examples():
    A = Matrix([[1, 2], [3, 4]])
    assert submatrix(A, [0, 1], [0, 1]) == A
    assert submatrix(A, [0], [1]) == Matrix([[2]])
    C = Matrix([[1, 2, 3], [4, 5, 6], [7, 8, 9]])
    assert submatrix(C, [0, 1], [0, 1]) == Matrix([[1, 2], [4, 5]])
    with pytest.raises(IndexError):
        submatrix(C, [0, 3], [0])
    with pytest.raises(ValueError):
        check_index_set([1, 1], 3)


def test_scaling_examples():
    assert scale_left(j, Q([[b]])) == Q([[j + i]])
    assert scale_right(Q([[b]]), j) == Q([[j - i]])


def test_stacking():
    A = Matrix([[1, 2]])
    assert vstack(A, A) == Matrix([[1, 2], [1, 2]])
    assert hstack(A, A) == Matrix([[1, 2, 1, 2]])


def test_mixed_rings_promote_to_quaternion():
    assert (Matrix([[1]]) + Q([[i]])).ring.name == "quaternion"


def test_str_renders_grammar():
    assert str(Q([[1, b], [j, j + i]])) == "[ 1  1+k ]\n[ j  i+j ]"


@given(matrices(), st.data())
def test_rc_product_matches_sympy(A, data):
    B = data.draw(matrices(rows=A.cols))
    assert rc_mul(A, B) == naive_rc(A, B)


@given(matrices(), st.data())
def test_duality_transports(A, data):
    B = data.draw(matrices(rows=A.cols))
    cr = cr_mul(A, B)
    assert transpose(rc_mul(A, B)) == cr_mul(transpose(B), transpose(A))
    assert cr == conj_matrix(rc_mul(conj_matrix(A), conj_matrix(B)))
    assert cr == opposite_mul(A, B)


@given(rational_matrices(), st.data())
def test_products_agree_over_rationals(A, data):
    B = data.draw(rational_matrices(rows=A.cols))
    assert rc_mul(A, B) == cr_mul(A, B)


@given(matrices(), st.data())
def test_products_are_associative(A, data):
    B = data.draw(matrices(rows=A.cols))
    C = data.draw(matrices(rows=B.cols))
    assert rc_mul(rc_mul(A, B), C) == rc_mul(A, rc_mul(B, C))
    assert cr_mul(cr_mul(A, B), C) == cr_mul(A, cr_mul(B, C))


@given(matrices())
def test_involutions(A):
    assert transpose(transpose(A)) == A
    assert conj_matrix(conj_matrix(A)) == A
    assert A + zeros(*A.shape) == A
    assert A - A == zeros(*A.shape)


@given(quaternions, matrices(), st.data())
def test_scaling_distributes(d, A, data):
    B = data.draw(matrices(rows=A.rows, cols=A.cols))
    assert scale_left(d, A + B) == scale_left(d, A) + scale_left(d, B)
    assert scale_right(A + B, d) == scale_right(A, d) + scale_right(B, d)


@given(matrices())
def test_hash_consistent_with_eq(A):
    B = Matrix([list(r) for r in A.entries], "quaternion")
    assert A == B and hash(A) == hash(B)
