import itertools
from fractions import Fraction

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from oracles import oracle_inverse, oracle_rank
from skewlin import (
    Inconsistent,
    Matrix,
    Parametric,
    Quaternion,
    SingularMatrixError,
    Unique,
    apply_system,
    cr_inverse,
    cr_mul,
    homogeneous_space_closure_check,
    identity,
    rc_inverse,
    rc_mul,
    solve_general,
    solve_nonsingular,
    witness_matrix,
)
from skewlin.solver import canonical_system, scalar_side
from strategies import matrices, products, quaternions, rational_matrices, sides, square_matrices

i, j, k = Quaternion(0, 1), Quaternion(0, 0, 1), Quaternion(0, 0, 0, 1)
half = Fraction(1, 2)


def test_inverse_examples():
    assert rc_inverse(identity(3)) == identity(3)
    A = Matrix([[1, 2], [3, 4]])
    expected = Matrix([[-2, 1], [Fraction(3, 2), -half]])
    assert rc_inverse(A) == expected
    assert rc_inverse(A, method="quasideterminant") == expected
    assert rc_mul(A, expected) == rc_mul(expected, A) == identity(2)


def test_witness_inverses():
    W = witness_matrix()
    assert rc_inverse(W) is None
    assert rc_inverse(W, method="quasideterminant") is None
    V = cr_inverse(W)
    assert V == Matrix([[half + half * k, half * i - half * j], [-half * k, -half * i]], "quaternion")
    assert cr_mul(V, W) == cr_mul(W, V) == identity(2)
    assert cr_inverse(identity(2)) == identity(2)


def test_inverse_requires_square():
    with pytest.raises(ValueError):
        rc_inverse(Matrix([[1, 2]]))


def test_solve_nonsingular_examples():
    assert solve_nonsingular(identity(2), (i, k)) == (i, k)
    assert solve_nonsingular(Matrix([[1, 2], [3, 4]]), (1, 1), method="both") == (-1, 1)
    D = Matrix([[j, 0], [0, 1 + k]], "quaternion")
    assert solve_nonsingular(D, (1, 1), method="both") == (-j, half - half * k)


def test_solve_nonsingular_rejects_singular():
    with pytest.raises(SingularMatrixError):
        solve_nonsingular(witness_matrix(), (1, 0))


def test_witness_homogeneous_system():
    W = witness_matrix()
    out = solve_general(W, (0, 0))
    assert isinstance(out, Parametric)
    assert len(out.free) == 1
    (v,) = out.basis
    assert rc_mul(W, Matrix([[x] for x in v], "quaternion")).is_zero()
    for side, product in itertools.product(["left", "right"], ["rc", "cr"]):
        out = solve_general(W, (0, 0), side, product)
        assert isinstance(out, Parametric) == (product == "rc")


def test_inconsistent_example():
    out = solve_general(Matrix([[1, 2], [2, 4]]), (1, 3))
    assert out == Inconsistent(1, 2)


def test_unique_agrees_with_solve_nonsingular():
    A = Matrix([[1, 2], [3, 4]])
    assert solve_general(A, (1, 1)) == Unique(solve_nonsingular(A, (1, 1)))


def test_scalar_side_table():
    assert scalar_side("right", "rc") == "right"
    assert scalar_side("left", "rc") == "left"
    assert scalar_side("right", "cr") == "left"
    assert scalar_side("left", "cr") == "right"


def test_closure_check_empty_is_vacuous():
    assert homogeneous_space_closure_check([], witness_matrix())


def test_closure_fails_with_wrong_side_scalars():
    # x solves W x = 0; right scalars keep it a solution but left scalars need not
    W = witness_matrix()
    (v,) = solve_general(W, (0, 0)).basis
    assert homogeneous_space_closure_check([v], W, "right", "rc", scalars=[i, j])
    assert apply_system(W, [i * x for x in v]) != (0, 0)


@given(square_matrices())
def test_elimination_inverse_matches_oracle(A):
    assert rc_inverse(A) == oracle_inverse(A)
    assert cr_inverse(A) == oracle_inverse(A, "cr")


@given(rational_matrices(rows=3, cols=3))
def test_inverses_agree_over_rationals(A):
    assert rc_inverse(A) == cr_inverse(A)


@given(square_matrices(), st.data())
def test_solve_nonsingular_substitutes_back(A, data):
    assume(rc_inverse(A) is not None)
    b = data.draw(st.lists(quaternions, min_size=A.rows, max_size=A.rows))
    x = solve_nonsingular(A, b, method="both")
    assert apply_system(A, x) == tuple(b)


@given(matrices(), sides, products, st.data())
def test_general_solver_classifies_and_substitutes(A, side, product, data):
    n_eq = A.rows if side == "right" else A.cols
    n_unk = A.cols if side == "right" else A.rows
    consistent = data.draw(st.booleans())
    if consistent:
        x0 = data.draw(st.lists(quaternions, min_size=n_unk, max_size=n_unk))
        b = apply_system(A, x0, side, product)
    else:
        b = tuple(data.draw(st.lists(quaternions, min_size=n_eq, max_size=n_eq)))
    out = solve_general(A, b, side, product)
    M, _, _ = canonical_system(A, b, side, product)
    r = oracle_rank(M)
    if isinstance(out, Inconsistent):
        assert not consistent
        assert out.rank == r < out.extended_rank
        return
    if isinstance(out, Unique):
        assert r == n_unk
        assert apply_system(A, out.solution, side, product) == b
        return
    assert len(out.free) == n_unk - r
    assert out.scalar_side == scalar_side(side, product)
    values = data.draw(st.lists(quaternions, min_size=len(out.free), max_size=len(out.free)))
    assert apply_system(A, out.instantiate(values), side, product) == b
    assert homogeneous_space_closure_check(out.basis, A, side, product)
