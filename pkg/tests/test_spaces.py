import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import oracle_rank
from skewlin import (
    Basis,
    LinearMap,
    Matrix,
    Orientation,
    Quaternion,
    VectorFamily,
    apply_map,
    automorphism_check,
    change_of_basis,
    compose_maps,
    coordinates,
    cr_mul,
    dimension,
    extract_basis,
    identity,
    in_span,
    inverse_map,
    is_independent,
    rc_inverse,
    rc_mul,
    transform_coordinates,
    witness_matrix,
)
from skewlin.sampling import random_nonsingular, random_rank_k
from skewlin.spaces import combine, identity_map
from skewlin.matrix import row_vector
from strategies import quaternions

i, j, k = Quaternion(0, 1), Quaternion(0, 0, 1), Quaternion(0, 0, 0, 1)
orientations = st.sampled_from(list(Orientation))


def test_orientation_table():
    assert [(o.side, o.product, o.scalar_side) for o in Orientation] == [
        ("left", "rc", "left"),
        ("left", "cr", "right"),
        ("right", "rc", "right"),
        ("right", "cr", "left"),
    ]
    assert Orientation.parse("DRC") is Orientation.DRC
    with pytest.raises(ValueError):
        Orientation.parse("rrc")


def test_standard_rows_are_independent():
    assert is_independent(VectorFamily(identity(3)))


def test_witness_rows_depend_on_orientation():
    W = witness_matrix()
    assert not is_independent(VectorFamily(W, "rcd"))
    assert not is_independent(VectorFamily(W, "dcr"))
    assert is_independent(VectorFamily(W, "crd"))
    assert is_independent(VectorFamily(W, "drc"))


def test_span_examples():
    F = VectorFamily.of([[1, 1 + k]])
    assert in_span(F, (j, j + i)) == (j,)
    G = VectorFamily.of([[1, 0], [0, 1]])
    assert in_span(G, (0, 1)) == (0, 1)
    H = VectorFamily.of([[1, 2], [2, 4]])
    assert in_span(H, (1, 3)) is None


def test_coordinates_examples():
    v = (i, 1 + j)
    assert coordinates(Basis.standard(2), v) == v
    B = Basis(Matrix([[1, 0], [1, 1]]))
    assert coordinates(B, (3, 2)) == (1, 2)


def test_not_a_basis():
    with pytest.raises(ValueError):
        Basis(witness_matrix(), "rcd")
    Basis(witness_matrix(), "crd")


@pytest.mark.parametrize("orientation", list(Orientation))
def test_rescaled_basis_vector(orientation):
    # scaling basis vector 0 by d on the scalar side divides its coordinate by d on that side
    B = Basis(Matrix([[1, i], [j, 2]], "quaternion"), orientation)
    d = 1 + k
    left = orientation.scalar_side == "left"
    b0 = [d * x if left else x * d for x in B.vector(0)]
    B2 = Basis(Matrix([b0, list(B.vector(1))], "quaternion"), orientation)
    v = (k, 1 - j)
    c = coordinates(B, v)
    c2 = coordinates(B2, v)
    assert c2[1] == c[1]
    assert c2[0] == (c[0] * d.inverse() if left else d.inverse() * c[0])


def test_transition_product_for_column_orientation():
    # in drc the witness rows are a basis; stored row-wise its transition is CR- but not RC-nonsingular
    W = witness_matrix()
    T = change_of_basis(Basis.standard(2, "drc", W.ring), Basis(W, "drc"))
    assert T == W
    assert oracle_rank(T, "cr") == 2 and oracle_rank(T, "rc") == 1
    T_crd = change_of_basis(Basis.standard(2, "crd", W.ring), Basis(W, "crd"))
    assert oracle_rank(T_crd, "cr") == 2


def test_change_of_basis_identity():
    B = Basis(Matrix([[1, i], [j, 2]], "quaternion"))
    assert change_of_basis(B, B) == identity(2)


@given(st.integers(0, 2**32), st.integers(1, 4), orientations)
def test_change_of_basis_round_trip(seed, n, orientation):
    rng = random.Random(seed)
    B1 = Basis(random_nonsingular(rng, n, product=orientation.product), orientation)
    B2 = Basis(random_nonsingular(rng, n, product=orientation.product), orientation)
    T = change_of_basis(B1, B2)
    S = change_of_basis(B2, B1)
    # transition matrices are stored row-wise, so right-side orientations invert under the other product
    flip = orientation.side == "right"
    mul = rc_mul if (orientation.product == "rc") != flip else cr_mul
    assert mul(S, T) == identity(n) == mul(T, S)
    assert oracle_rank(T, orientation.product if not flip else ("cr" if orientation.product == "rc" else "rc")) == n
    v = tuple(rng.choice([i, j, 1 + k, 0]) for _ in range(n))
    c2 = coordinates(B2, v)
    assert transform_coordinates(T, c2, orientation) == coordinates(B1, v)
    assert combine(B2, c2) == v
    assert coordinates(B2, v, method="quasideterminant") == c2


@given(st.integers(0, 2**32), orientations)
def test_extracted_bases_have_equal_size(seed, orientation):
    rng = random.Random(seed)
    count, dim = rng.randint(1, 5), rng.randint(1, 4)
    F = VectorFamily(random_rank_k(rng, count, dim, rng.randint(0, min(count, dim))), orientation)
    forward = extract_basis(F)
    backward = extract_basis(F, order=list(reversed(range(count))))
    assert len(forward) == len(backward) == dimension(F)
    assert is_independent(F.subfamily(forward)) and is_independent(F.subfamily(backward))
    for s in range(count):
        assert in_span(F.subfamily(forward), F.vector(s)) is not None


def test_maps_basics():
    W = witness_matrix()
    f = LinearMap(W, "rcd")
    row = (j, 1)
    assert f(row) == rc_mul(row_vector(row, W.ring), W).row(0)
    assert identity_map(2)(row) == row
    assert compose_maps(f, identity_map(2)) == f
    assert not automorphism_check(f)
    assert automorphism_check(LinearMap(W, "crd"))
    assert automorphism_check(identity_map(3))
    with pytest.raises(ArithmeticError):
        inverse_map(f)


@given(st.integers(0, 2**32), orientations, quaternions)
def test_map_linearity(seed, orientation, d):
    rng = random.Random(seed)
    A = random_rank_k(rng, 3, 3, rng.randint(0, 3))
    f = LinearMap(A, orientation)
    a = tuple(rng.choice([i, j, k, 1, 0]) for _ in range(3))
    bvec = tuple(rng.choice([i + j, 2, 0]) for _ in range(3))
    left = orientation.scalar_side == "left"
    scaled = tuple(d * x if left else x * d for x in a)
    assert f(scaled) == tuple(d * y if left else y * d for y in f(a))
    assert f(tuple(x + y for x, y in zip(a, bvec))) == tuple(x + y for x, y in zip(f(a), f(bvec)))


@given(st.integers(0, 2**32), orientations)
def test_composition(seed, orientation):
    rng = random.Random(seed)
    f, g, h = (LinearMap(random_nonsingular(rng, 2, product=orientation.product), orientation) for _ in range(3))
    a = (i, 1 - k)
    fg = compose_maps(f, g)
    assert fg(a) == g(f(a))
    mul = rc_mul if orientation.product == "rc" else cr_mul
    expected = mul(f.matrix, g.matrix) if orientation.side == "left" else mul(g.matrix, f.matrix)
    assert fg.matrix == expected
    assert compose_maps(compose_maps(f, g), h) == compose_maps(f, compose_maps(g, h))
    assert automorphism_check(fg)
    finv = inverse_map(f)
    assert compose_maps(f, finv).matrix == identity(2) == compose_maps(finv, f).matrix
    assert automorphism_check(finv)


def test_rcd_composition_is_rc_product():
    A = Matrix([[1, i], [j, k]], "quaternion")
    B = Matrix([[k, 1], [0, 1 + i]], "quaternion")
    assert compose_maps(LinearMap(A), LinearMap(B)).matrix == rc_mul(A, B)
    assert rc_inverse(rc_mul(A, B)) == rc_mul(rc_inverse(B), rc_inverse(A))
    assert apply_map(LinearMap(A), (1, 0)) == A.row(0)
