"""Inverses and systems of linear equations over a division ring.

A system is ``A * x = b`` (``side="right"``: unknowns to the right of ``A``)
or ``x * A = b`` (``side="left"``), with ``*`` the RC or CR product.  All
four variants are transported to the canonical ``A' (rc) x' = b'`` by
transposition and/or entrywise conjugation, solved there, and the answer is
transported back:

    ======  =======  =========================  ==========
    side    product  canonical matrix           transport
    ======  =======  =========================  ==========
    right   rc       A                          none
    right   cr       conj(A)                    conj
    left    rc       conj(A^T)                  conj
    left    cr       A^T                        none
    ======  =======  =========================  ==========
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Callable, Literal, Sequence, Union

from .elimination import gauss_jordan_inverse
from .matrix import (
    DimensionError,
    Matrix,
    column,
    conj_matrix,
    cr_mul,
    hstack,
    rc_mul,
    row_vector,
    submatrix,
    transpose,
)
from .quasidet import quasidet_inverse
from .rank import rc_rank
from .scalars import QUATERNIONS, DivisionRing, Quaternion, Scalar

__all__ = [
    "SingularMatrixError",
    "Unique",
    "Parametric",
    "Inconsistent",
    "SolveOutcome",
    "rc_inverse",
    "cr_inverse",
    "inverse",
    "solve_nonsingular",
    "solve_general",
    "apply_system",
    "canonical_system",
    "scalar_side",
    "homogeneous_space_closure_check",
]

Side = Literal["left", "right"]
Product = Literal["rc", "cr"]
Vector = tuple[Scalar, ...]


class SingularMatrixError(ArithmeticError):
    """A nonsingular matrix was required."""


@dataclass(frozen=True)
class Unique:
    solution: Vector


@dataclass(frozen=True)
class Parametric:
    """``particular`` plus any combination of ``basis`` on ``scalar_side``.

    ``free`` lists the unknowns that may take arbitrary values; basis vector
    ``t`` has a one at ``free[t]`` and zeros at the other free positions.
    """

    particular: Vector
    free: tuple[int, ...]
    basis: tuple[Vector, ...]
    scalar_side: Side = "right"

    def instantiate(self, values: Sequence[Any]) -> Vector:
        """The solution whose free unknowns take ``values``."""
        if len(values) != len(self.free):
            raise DimensionError(f"expected {len(self.free)} free values, got {len(values)}")
        x = list(self.particular)
        for v, d in zip(self.basis, values):
            for i, e in enumerate(v):
                x[i] = x[i] + (d * e if self.scalar_side == "left" else e * d)
        return tuple(x)


@dataclass(frozen=True)
class Inconsistent:
    rank: int
    extended_rank: int


SolveOutcome = Union[Unique, Parametric, Inconsistent]


# ---------------------------------------------------------------------------
# inverses


def _square(A: Matrix) -> None:
    if A.rows != A.cols:
        raise DimensionError(f"inverse of a non-square {A.rows}x{A.cols} matrix")


def rc_inverse(A: Matrix, method: str = "elimination") -> Matrix | None:
    """``B`` with ``A (rc) B == B (rc) A == I``, or ``None`` if ``A`` is RC-singular.

    ``method="quasideterminant"`` builds ``B[j][i] = invert(|A|_ij)`` instead
    of running Gauss-Jordan elimination.
    """
    _square(A)
    if method == "elimination":
        return gauss_jordan_inverse(A)
    if method == "quasideterminant":
        return quasidet_inverse(A)
    raise ValueError(f"unknown method {method!r}")


def cr_inverse(A: Matrix, method: str = "elimination") -> Matrix | None:
    """``B`` with ``A (cr) B == B (cr) A == I``, by conjugating :func:`rc_inverse`."""
    B = rc_inverse(conj_matrix(A), method)
    return None if B is None else conj_matrix(B)


def inverse(A: Matrix, product: Product = "rc", method: str = "elimination") -> Matrix | None:
    return rc_inverse(A, method) if product == "rc" else cr_inverse(A, method)


# ---------------------------------------------------------------------------
# systems


def scalar_side(side: Side, product: Product) -> Side:
    """Side on which scalars act on solutions of the homogeneous system."""
    if product == "rc":
        return side
    return "left" if side == "right" else "right"


def _vector(b: Any) -> Vector:
    if isinstance(b, Matrix):
        if b.cols == 1:
            return b.col(0)
        if b.rows == 1:
            return b.row(0)
        raise DimensionError(f"right-hand side must be a single row or column, got {b.rows}x{b.cols}")
    return tuple(b)


def _ring_for(A: Matrix, values: Sequence[Any]) -> DivisionRing:
    return QUATERNIONS if A.ring is QUATERNIONS or any(isinstance(v, Quaternion) for v in values) else A.ring


def apply_system(A: Matrix, x: Sequence[Any], side: Side = "right", product: Product = "rc") -> Vector:
    """Left-hand side of the system evaluated at ``x``."""
    x = _vector(x)
    ring = _ring_for(A, x)
    mul = rc_mul if product == "rc" else cr_mul
    if side == "right":
        return mul(A, column(x, ring)).col(0)
    return mul(row_vector(x, ring), A).row(0)


def _canonical(A: Matrix, side: Side, product: Product) -> tuple[Matrix, bool]:
    M = transpose(A) if side == "left" else A
    flip = (side, product) in (("right", "cr"), ("left", "rc"))
    return (conj_matrix(M) if flip else M), flip


def canonical_system(
    A: Matrix, b: Any, side: Side = "right", product: Product = "rc"
) -> tuple[Matrix, Vector, Callable[[Vector], Vector]]:
    """``(M, b2, back)`` with ``M (rc) y = b2`` equivalent to the given system and ``x = back(y)``."""
    b = _vector(b)
    ring = _ring_for(A, b)
    M, flip = _canonical(A.as_ring(ring), side, product)
    b = tuple(ring.coerce(v) for v in b)
    if not flip:
        return M, b, tuple
    c = ring.conj
    return M, tuple(c(v) for v in b), lambda y: tuple(c(v) for v in y)


def _solve_canonical(A: Matrix, b: Vector) -> SolveOutcome:
    """Solve ``A (rc) x = b``."""
    ring = A.ring
    m = A.cols
    rep = rc_rank(A)
    ext = rc_rank(hstack(A, column(b, ring)))
    if ext.rank > rep.rank:
        return Inconsistent(rep.rank, ext.rank)
    rows, cols = rep.major_rows, rep.major_cols
    free = tuple(c for c in range(m) if c not in cols)
    zero, one = ring.zero, ring.one
    particular = [zero] * m
    basis: list[list[Scalar]] = []
    if rows:
        core_inv = gauss_jordan_inverse(submatrix(A, rows, cols))
        xt = rc_mul(core_inv, column([b[s] for s in rows], ring)).col(0)
        for c, v in zip(cols, xt):
            particular[c] = v
        for f in free:
            v = [zero] * m
            v[f] = one
            yt = rc_mul(core_inv, column([A[s, f] for s in rows], ring)).col(0)
            for c, y in zip(cols, yt):
                v[c] = -y
            basis.append(v)
    else:
        for f in free:
            v = [zero] * m
            v[f] = one
            basis.append(v)
    if not free:
        return Unique(tuple(particular))
    return Parametric(tuple(particular), free, tuple(tuple(v) for v in basis))


def solve_general(A: Matrix, b: Any, side: Side = "right", product: Product = "rc") -> SolveOutcome:
    """Complete solution of ``A * x = b`` (side right) or ``x * A = b`` (side left).

    Inconsistent exactly when appending ``b`` raises the rank.  Otherwise the
    equations outside the major minor are dropped, the unknowns outside it
    are free (zero in the particular solution) and the square core is
    inverted.
    """
    if side not in ("left", "right"):
        raise ValueError(f"side must be 'left' or 'right', got {side!r}")
    if product not in ("rc", "cr"):
        raise ValueError(f"product must be 'rc' or 'cr', got {product!r}")
    b = _vector(b)
    n_eq = A.rows if side == "right" else A.cols
    if len(b) != n_eq:
        raise DimensionError(f"system has {n_eq} equations but right-hand side has {len(b)} entries")
    ring = _ring_for(A, b)
    A = A.as_ring(ring)
    b = tuple(ring.coerce(v) for v in b)
    M, flip = _canonical(A, side, product)
    if flip:
        b = tuple(ring.conj(v) for v in b)
    outcome = _solve_canonical(M, b)
    if not flip or isinstance(outcome, Inconsistent):
        if isinstance(outcome, Parametric):
            outcome = Parametric(outcome.particular, outcome.free, outcome.basis, scalar_side(side, product))
        return outcome
    c = ring.conj
    if isinstance(outcome, Unique):
        return Unique(tuple(c(v) for v in outcome.solution))
    return Parametric(
        tuple(c(v) for v in outcome.particular),
        outcome.free,
        tuple(tuple(c(v) for v in vec) for vec in outcome.basis),
        scalar_side(side, product),
    )


def solve_nonsingular(A: Matrix, b: Any, method: str = "elimination") -> Vector:
    """The unique ``x`` with ``A (rc) x = b`` for RC-nonsingular ``A``.

    ``method`` is ``"elimination"`` (``rc_inverse(A) (rc) b``),
    ``"quasideterminant"`` (``x_j = sum_i invert(|A|_ij) b_i``) or ``"both"``,
    which computes the two and raises if they disagree.
    """
    _square(A)
    b = _vector(b)
    if len(b) != A.rows:
        raise DimensionError(f"right-hand side has {len(b)} entries, expected {A.rows}")
    methods = ("elimination", "quasideterminant") if method == "both" else (method,)
    results = []
    for name in methods:
        B = rc_inverse(A, name)
        if B is None:
            raise SingularMatrixError("matrix is RC-singular; use solve_general for the full solution set")
        results.append(rc_mul(B, column(b, _ring_for(A, b))).col(0))
    if any(r != results[0] for r in results[1:]):
        raise AssertionError("elimination and quasideterminant solutions disagree")
    return results[0]


def _default_scalars(ring: DivisionRing) -> list[Scalar]:
    if ring is QUATERNIONS:
        return [Quaternion(0, 1), Quaternion(0, 0, 1), Quaternion(1, 0, 0, 1), Quaternion("-1/2", 2, "1/3", -1)]
    return [ring.coerce(2), ring.coerce("-3/7")]


def homogeneous_space_closure_check(
    solutions: Sequence[Sequence[Any]],
    A: Matrix,
    side: Side = "right",
    product: Product = "rc",
    scalars: Sequence[Any] | None = None,
) -> bool:
    """Do sums and scalar multiples of the given homogeneous solutions still solve?

    Scalars act on ``scalar_side(side, product)``; the wrong side would break
    closure for noncommutative scalars.
    """
    sols = [tuple(s) for s in solutions]
    if not sols:
        return True
    ring = _ring_for(A, [v for s in sols for v in s])
    n_eq = A.rows if side == "right" else A.cols
    zero = tuple([ring.zero] * n_eq)
    scalars = list(scalars) if scalars is not None else _default_scalars(ring)
    on_left = scalar_side(side, product) == "left"

    def solves(x: Sequence[Any]) -> bool:
        return apply_system(A, x, side, product) == zero

    for x in sols:
        for y in sols:
            if not solves([u + v for u, v in zip(x, y)]):
                return False
        for d in scalars:
            if not solves([d * u if on_left else u * d for u in x]):
                return False
    return True
