"""Solving A x = b and x A = b under both products.

Run: python demos/03_solving_systems.py
"""

from skewlin import Matrix, Parametric, apply_system, parse_scalar, solve_general, solve_nonsingular

j, k = parse_scalar("j"), parse_scalar("k")

# a nonsingular system, solved by elimination and by quasideterminants
D = Matrix([[j, 0], [0, 1 + k]], "quaternion")
x = solve_nonsingular(D, (1, 1), method="both")
print("diag(j, 1+k) x = (1, 1):  x =", tuple(map(str, x)))

# the same right-hand side, four readings of "the system with matrix A"
A = Matrix([[1, 1 + k], [j, j * (1 + k)]], "quaternion")
for side in ("right", "left"):
    for product in ("rc", "cr"):
        out = solve_general(A, (0, 0), side, product)
        form = "A x = 0" if side == "right" else "x A = 0"
        print(f"{form:8} {product.upper()}: {type(out).__name__}", end="")
        if isinstance(out, Parametric):
            v = out.basis[0]
            print(f", kernel spanned by {tuple(map(str, v))} with scalars on the {out.scalar_side}", end="")
            d = parse_scalar("i")
            scaled = [d * e if out.scalar_side == "left" else e * d for e in v]
            print(f"; scaled vector still solves: {apply_system(A, scaled, side, product) == (0, 0)}", end="")
        print()

# an inconsistent system reports both ranks
print(solve_general(Matrix([[1, 2], [2, 4]]), (1, 3)))
