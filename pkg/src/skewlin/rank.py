"""RC/CR rank with major minors and dependency certificates.

For the RC rank the certificates read::

    row p  == sum_s coeff[p][s] * row s      (coefficients on the LEFT)
    col r  == sum_t col t * coeff[r][t]      (coefficients on the RIGHT)

where ``s`` runs over the major rows and ``t`` over the major columns.  The
CR report mirrors the sides.  :func:`minor_rank_oracle` recomputes the rank
literally as the size of the largest nonsingular minor and exists to check
the elimination route, not to replace it.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Literal

from .elimination import gauss_jordan_inverse, row_echelon
from .matrix import DimensionError, Matrix, conj_matrix, cr_mul, rc_mul, submatrix
from .scalars import Scalar

__all__ = [
    "RankReport",
    "rc_rank",
    "cr_rank",
    "rank",
    "minor_rank_oracle",
    "first_major_minor",
    "is_rc_singular",
    "is_cr_singular",
    "is_singular",
    "product_singularity_check",
    "verify_certificates",
    "left_annihilator",
    "right_annihilator",
]

Product = Literal["rc", "cr"]


@dataclass(frozen=True)
class RankReport:
    rank: int
    major_rows: tuple[int, ...]
    major_cols: tuple[int, ...]
    row_dependencies: dict[int, tuple[Scalar, ...]] = field(default_factory=dict)
    col_dependencies: dict[int, tuple[Scalar, ...]] = field(default_factory=dict)
    product: Product = "rc"

    @property
    def row_coefficient_side(self) -> str:
        return "left" if self.product == "rc" else "right"

    @property
    def col_coefficient_side(self) -> str:
        return "right" if self.product == "rc" else "left"


def _dot(left, right, zero):
    acc = zero
    for a, b in zip(left, right):
        acc = acc + a * b
    return acc


def rc_rank(A: Matrix) -> RankReport:
    """RC rank by left-row-operation elimination; pivots give the major minor."""
    ech = row_echelon(A)
    rows, cols = ech.pivot_rows, ech.pivot_cols
    k = len(rows)
    zero = A.ring.zero
    if k == 0:
        return RankReport(
            0, (), (),
            {p: () for p in range(A.rows)},
            {r: () for r in range(A.cols)},
        )
    core_inv = gauss_jordan_inverse(submatrix(A, rows, cols))
    assert core_inv is not None, "pivot minor must be nonsingular"
    row_deps: dict[int, tuple[Scalar, ...]] = {}
    for p in range(A.rows):
        if p in rows:
            continue
        rp = [A[p, c] for c in cols]
        row_deps[p] = tuple(A.ring.coerce(_dot(rp, core_inv.col(t), zero)) for t in range(k))
    col_deps: dict[int, tuple[Scalar, ...]] = {}
    for r in range(A.cols):
        if r in cols:
            continue
        cr = [A[s, r] for s in rows]
        col_deps[r] = tuple(A.ring.coerce(_dot(core_inv.row(t), cr, zero)) for t in range(k))
    return RankReport(k, rows, cols, row_deps, col_deps, "rc")


def cr_rank(A: Matrix) -> RankReport:
    """CR rank via the conjugation transport of :func:`rc_rank`."""
    rep = rc_rank(conj_matrix(A))
    c = A.ring.conj
    return RankReport(
        rep.rank,
        rep.major_rows,
        rep.major_cols,
        {p: tuple(c(x) for x in v) for p, v in rep.row_dependencies.items()},
        {r: tuple(c(x) for x in v) for r, v in rep.col_dependencies.items()},
        "cr",
    )


def rank(A: Matrix, product: Product = "rc") -> RankReport:
    if product == "rc":
        return rc_rank(A)
    if product == "cr":
        return cr_rank(A)
    raise ValueError(f"unknown product {product!r}")


def _nonsingular(M: Matrix, product: Product) -> bool:
    if product == "rc":
        return gauss_jordan_inverse(M) is not None
    return gauss_jordan_inverse(conj_matrix(M)) is not None


def first_major_minor(A: Matrix, product: Product = "rc") -> tuple[tuple[int, ...], tuple[int, ...]]:
    """The lexicographically first largest nonsingular minor, by exhaustive search.

    Combinatorial; meant for ``min(m, n) <= 4``.
    """
    for k in range(min(A.rows, A.cols), 0, -1):
        for rows in combinations(range(A.rows), k):
            for cols in combinations(range(A.cols), k):
                if _nonsingular(submatrix(A, rows, cols), product):
                    return rows, cols
    return (), ()


def minor_rank_oracle(A: Matrix, product: Product = "rc") -> int:
    return len(first_major_minor(A, product)[0])


def _square(A: Matrix) -> None:
    if A.rows != A.cols:
        raise DimensionError(f"singularity of a non-square {A.rows}x{A.cols} matrix")


def is_rc_singular(A: Matrix) -> bool:
    _square(A)
    return rc_rank(A).rank < A.rows


def is_cr_singular(A: Matrix) -> bool:
    _square(A)
    return cr_rank(A).rank < A.rows


def is_singular(A: Matrix, product: Product = "rc") -> bool:
    return is_rc_singular(A) if product == "rc" else is_cr_singular(A)


def product_singularity_check(A: Matrix, B: Matrix, product: Product = "rc") -> tuple[bool, bool, bool]:
    """``(singular(A), singular(B), singular(A * B))`` under one product flavour."""
    _square(A)
    _square(B)
    if A.shape != B.shape:
        raise DimensionError(f"factors must have equal size, got {A.shape} and {B.shape}")
    C = rc_mul(A, B) if product == "rc" else cr_mul(A, B)
    return is_singular(A, product), is_singular(B, product), is_singular(C, product)


# ---------------------------------------------------------------------------
# certificates


def _combine(coeffs, vectors, length: int, coeff_left: bool, zero) -> list:
    out = [zero] * length
    for c, v in zip(coeffs, vectors):
        for j in range(length):
            out[j] = out[j] + (c * v[j] if coeff_left else v[j] * c)
    return out


def verify_certificates(A: Matrix, report: RankReport) -> bool:
    """Re-multiply every dependency identity in ``report`` exactly."""
    zero = A.ring.zero
    rows_left = report.product == "rc"
    if set(report.row_dependencies) != set(range(A.rows)) - set(report.major_rows):
        return False
    if set(report.col_dependencies) != set(range(A.cols)) - set(report.major_cols):
        return False
    major_rows = [A.row(s) for s in report.major_rows]
    major_cols = [A.col(t) for t in report.major_cols]
    for p, coeffs in report.row_dependencies.items():
        if list(A.row(p)) != _combine(coeffs, major_rows, A.cols, rows_left, zero):
            return False
    for r, coeffs in report.col_dependencies.items():
        if list(A.col(r)) != _combine(coeffs, major_cols, A.rows, not rows_left, zero):
            return False
    if report.rank:
        M = submatrix(A, report.major_rows, report.major_cols)
        if not _nonsingular(M, report.product):
            return False
    return True


def left_annihilator(A: Matrix, report: RankReport | None = None) -> Matrix | None:
    """A nonzero row ``lam`` with ``lam * A == 0`` under the report's product.

    Built from the first dependent row's certificate; ``None`` when the rows
    are independent.
    """
    report = report or rc_rank(A)
    if not report.row_dependencies:
        return None
    p = min(report.row_dependencies)
    lam = [A.ring.zero] * A.rows
    lam[p] = A.ring.one
    for s, c in zip(report.major_rows, report.row_dependencies[p]):
        lam[s] = -c
    return Matrix([lam], A.ring, rows=1, cols=A.rows)


def right_annihilator(A: Matrix, report: RankReport | None = None) -> Matrix | None:
    """A nonzero column ``mu`` with ``A * mu == 0`` under the report's product."""
    report = report or rc_rank(A)
    if not report.col_dependencies:
        return None
    r = min(report.col_dependencies)
    mu = [A.ring.zero] * A.cols
    mu[r] = A.ring.one
    for t, c in zip(report.major_cols, report.col_dependencies[r]):
        mu[t] = -c
    return Matrix([[x] for x in mu], A.ring, rows=A.cols, cols=1)
