"""Independent reference computations built on sympy.

Quaternion products come from ``sympy.algebras.Quaternion``.  Matrix
questions go through the complex adjoint: writing ``q = z1 + z2 j`` with
``z1, z2`` in Q(i), a quaternion matrix ``A`` maps to the complex matrix
``[[Z1, Z2], [-conj(Z2), conj(Z1)]]``.  The map is multiplicative for the
RC product and the complex rank is twice the RC rank.  CR questions reduce
to RC ones on the conjugate matrix.
"""

from __future__ import annotations

from fractions import Fraction

import sympy
from sympy import QQ, QQ_I
from sympy.polys.matrices import DomainMatrix
from sympy.algebras.quaternion import Quaternion as SymQuaternion

from skewlin import Matrix, Quaternion, conj_matrix


def _sym(f: Fraction) -> sympy.Rational:
    return sympy.Rational(f.numerator, f.denominator)


def to_sympy(q) -> SymQuaternion:
    q = Quaternion.coerce(q)
    return SymQuaternion(*(_sym(c) for c in q.coefficients))


def from_sympy(s: SymQuaternion) -> Quaternion:
    parts = [sympy.Rational(x) for x in (s.a, s.b, s.c, s.d)]
    return Quaternion(*(Fraction(int(p.p), int(p.q)) for p in parts))


def hamilton(p, q) -> Quaternion:
    return from_sympy(to_sympy(p) * to_sympy(q))


def _gauss(re: Fraction, im: Fraction):
    return QQ_I(QQ(re.numerator, re.denominator), QQ(im.numerator, im.denominator))


def complex_adjoint(A: Matrix) -> DomainMatrix:
    n, m = A.shape
    zero = QQ_I(0, 0)
    out = [[zero] * (2 * m) for _ in range(2 * n)]
    for r in range(n):
        for c in range(m):
            w, x, y, z = Quaternion.coerce(A[r, c]).coefficients
            out[r][c] = _gauss(w, x)
            out[r][m + c] = _gauss(y, z)
            out[n + r][c] = _gauss(-y, z)
            out[n + r][m + c] = _gauss(w, -x)
    return DomainMatrix(out, (2 * n, 2 * m), QQ_I)


def oracle_rank(A: Matrix, product: str = "rc") -> int:
    if A.rows == 0 or A.cols == 0:
        return 0
    M = A if product == "rc" else conj_matrix(A)
    return complex_adjoint(M).rank() // 2


def oracle_singular(A: Matrix, product: str = "rc") -> bool:
    return oracle_rank(A, product) < A.rows


def _fraction(x) -> Fraction:
    return Fraction(int(x.numerator), int(x.denominator))


def oracle_inverse(A: Matrix, product: str = "rc") -> Matrix | None:
    """RC (or CR) inverse read back from the inverse of the complex adjoint."""
    n = A.rows
    M = A if product == "rc" else conj_matrix(A)
    X = complex_adjoint(M)
    if X.rank() < 2 * n:
        return None
    Y = X.inv().to_list()
    grid = [
        [Quaternion(*(_fraction(v) for v in (Y[r][c].x, Y[r][c].y, Y[r][n + c].x, Y[r][n + c].y)))
         for c in range(n)]
        for r in range(n)
    ]
    inv = Matrix(grid, "quaternion", rows=n, cols=n)
    return inv if product == "rc" else conj_matrix(inv)


def naive_rc(A: Matrix, B: Matrix) -> Matrix:
    """Row-by-column product with every scalar product taken from sympy."""
    zero = Quaternion(0)
    return Matrix(
        [[sum((hamilton(A[i, k], B[k, j]) for k in range(A.cols)), zero) for j in range(B.cols)]
         for i in range(A.rows)],
        "quaternion",
        rows=A.rows,
        cols=B.cols,
    )

