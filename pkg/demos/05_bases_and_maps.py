"""Bases, coordinates and linear maps in each orientation.

Run: python demos/05_bases_and_maps.py
"""

import random

from skewlin import (
    Basis,
    LinearMap,
    Orientation,
    VectorFamily,
    automorphism_check,
    change_of_basis,
    compose_maps,
    coordinates,
    extract_basis,
    is_independent,
    parse_scalar,
    transform_coordinates,
    witness_matrix,
)
from skewlin.sampling import random_nonsingular

W = witness_matrix()
for o in Orientation:
    print(f"rows of the witness in {o.name.lower()}: independent = {is_independent(VectorFamily(W, o))}")

rng = random.Random(5)
o = Orientation.RCD
B1 = Basis(random_nonsingular(rng, 2, max_num=2, max_den=1), o)
B2 = Basis(random_nonsingular(rng, 2, max_num=2, max_den=1), o)
v = (parse_scalar("i"), parse_scalar("1-k"))
c1, c2 = coordinates(B1, v), coordinates(B2, v)
T = change_of_basis(B1, B2)
print("\nB1 =\n" + str(B1.coords), "\nB2 =\n" + str(B2.coords))
print("coordinates in B1:", tuple(map(str, c1)), " in B2:", tuple(map(str, c2)))
print("T maps B2-coordinates to B1-coordinates:", transform_coordinates(T, c2, o) == c1)

F = VectorFamily.of([[1, 0, 1], [parse_scalar("j"), 0, parse_scalar("j")], [0, 1, 0]])
print("\nextracted basis indices:", extract_basis(F), "and in reverse order:", extract_basis(F, [2, 1, 0]))

f = LinearMap(B1.coords, o)
g = LinearMap(B2.coords, o)
h = compose_maps(f, g)
print("\n(g o f)(v) == g(f(v)):", h(v) == g(f(v)), "  automorphism:", automorphism_check(h))
