"""RC and CR quasideterminants.

The RC quasideterminant at position ``(i, j)`` of a square matrix is::

    |A|_ij = A[i][j] - r (rc) inverse(M) (rc) c

where ``M`` is ``A`` with row ``i`` and column ``j`` deleted, ``r`` is row
``i`` without column ``j`` and ``c`` is column ``j`` without row ``i``.  When
``M`` has no inverse the quasideterminant is :class:`Undefined`, which is a
value and not an error.

Minor inverses are obtained recursively from quasideterminants of smaller
minors (block inversion about a Schur complement), never by elimination, so
this module is an independent route to everything
:mod:`skewlin.elimination` computes.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Union

from .matrix import DimensionError, Matrix, conj_matrix
from .scalars import Scalar, invert

__all__ = [
    "Undefined",
    "QuasidetResult",
    "MinorInverter",
    "rc_quasidet",
    "cr_quasidet",
    "quasidet_inverse",
    "is_defined",
]


@dataclass(frozen=True)
class Undefined:
    """The deleted minor ``rows x cols`` of the input has no inverse."""

    rows: tuple[int, ...]
    cols: tuple[int, ...]

    @property
    def reason(self) -> str:
        return f"minor rows={list(self.rows)} cols={list(self.cols)} is not invertible"

    def __str__(self) -> str:
        return "undefined"


QuasidetResult = Union[Scalar, Undefined]

Mul = Callable[[Scalar, Scalar], Scalar]


def _forward(a: Scalar, b: Scalar) -> Scalar:
    return a * b


def _reverse(a: Scalar, b: Scalar) -> Scalar:
    return b * a


def is_defined(result: QuasidetResult) -> bool:
    return not isinstance(result, Undefined)


class MinorInverter:
    """Inverses of the square minors of one matrix, memoised by index sets.

    ``inverse(rows, cols)`` returns a dict ``{(col, row): entry}`` giving the
    inverse of the minor on ``rows x cols`` (so it is indexed by the minor's
    column labels first), or ``None`` when the minor is singular.  ``mul`` is
    the scalar product; passing the reversed product computes in the
    opposite ring.  The memo lives as long as the instance, i.e. one
    top-level call.
    """

    def __init__(self, A: Matrix, mul: Mul = _forward) -> None:
        self.A = A
        self.mul = mul
        self.zero = A.ring.zero
        self._memo: dict[tuple[tuple[int, ...], tuple[int, ...]], dict | None] = {}

    def inverse(self, rows: tuple[int, ...], cols: tuple[int, ...]) -> dict[tuple[int, int], Scalar] | None:
        key = (rows, cols)
        if key not in self._memo:
            self._memo[key] = self._compute(rows, cols)
        return self._memo[key]

    def _dot(self, left: list[Scalar], right: list[Scalar]) -> Scalar:
        acc = self.zero
        for a, b in zip(left, right):
            if a and b:
                acc = acc + self.mul(a, b)
        return acc

    def schur(self, rows: tuple[int, ...], cols: tuple[int, ...], p: int, q: int) -> QuasidetResult:
        """Quasideterminant of the minor ``rows x cols`` at entry ``(p, q)``."""
        A = self.A
        sub_rows = tuple(r for r in rows if r != p)
        sub_cols = tuple(c for c in cols if c != q)
        if not sub_rows:
            return A[p, q]
        minv = self.inverse(sub_rows, sub_cols)
        if minv is None:
            return Undefined(sub_rows, sub_cols)
        # r (rc) M^-1 is a row indexed by sub_rows
        rm = [self._dot([A[p, c] for c in sub_cols], [minv[c, s] for c in sub_cols]) for s in sub_rows]
        correction = self._dot(rm, [A[s, q] for s in sub_rows])
        return A[p, q] - correction

    def _compute(self, rows: tuple[int, ...], cols: tuple[int, ...]) -> dict | None:
        A = self.A
        if len(rows) == 1:
            a = A[rows[0], cols[0]]
            return {(cols[0], rows[0]): invert(a)} if a else None
        for p in rows:
            for q in cols:
                sub_rows = tuple(r for r in rows if r != p)
                sub_cols = tuple(c for c in cols if c != q)
                minv = self.inverse(sub_rows, sub_cols)
                if minv is None:
                    continue
                s = self.schur(rows, cols, p, q)
                if not s:
                    # Invertible minor with vanishing Schur complement: singular.
                    return None
                return self._assemble(minv, sub_rows, sub_cols, p, q, invert(s))
        return None

    def _assemble(self, minv, sub_rows, sub_cols, p, q, s_inv) -> dict:
        A, mul = self.A, self.mul
        # u = M^-1 (rc) c, indexed by sub_cols; v = r (rc) M^-1, indexed by sub_rows
        u = {c: self._dot([minv[c, s] for s in sub_rows], [A[s, q] for s in sub_rows]) for c in sub_cols}
        v = {s: self._dot([A[p, c] for c in sub_cols], [minv[c, s] for c in sub_cols]) for s in sub_rows}
        out: dict[tuple[int, int], Scalar] = {(q, p): s_inv}
        for c in sub_cols:
            us = mul(u[c], s_inv)
            out[c, p] = -us
            for s in sub_rows:
                out[c, s] = minv[c, s] + mul(us, v[s])
        for s in sub_rows:
            out[q, s] = -mul(s_inv, v[s])
        return out


def _check(A: Matrix, i: int, j: int) -> None:
    if A.rows != A.cols:
        raise DimensionError(f"quasideterminant of a non-square {A.rows}x{A.cols} matrix")
    if A.rows == 0:
        raise DimensionError("quasideterminant of an empty matrix")
    if not (0 <= i < A.rows and 0 <= j < A.cols):
        raise IndexError(f"position ({i}, {j}) out of range for {A.rows}x{A.cols}")


def _coerce(A: Matrix, value: QuasidetResult) -> QuasidetResult:
    return value if isinstance(value, Undefined) else A.ring.coerce(value)


def rc_quasidet(A: Matrix, i: int, j: int, *, _inverter: MinorInverter | None = None) -> QuasidetResult:
    """RC quasideterminant ``|A|_ij``, or :class:`Undefined`."""
    _check(A, i, j)
    inverter = _inverter or MinorInverter(A)
    full = tuple(range(A.rows))
    return _coerce(A, inverter.schur(full, full, i, j))


def cr_quasidet(A: Matrix, i: int, j: int, *, method: str = "conjugate") -> QuasidetResult:
    """CR quasideterminant: the RC recursion with every scalar product reversed.

    ``method="conjugate"`` computes ``conj(|conj(A)|_ij)``; ``"opposite"``
    runs the recursion in the opposite ring.  The two agree on quaternions;
    only the second is available for rings without conjugation.
    """
    _check(A, i, j)
    if method == "opposite":
        full = tuple(range(A.rows))
        return _coerce(A, MinorInverter(A, _reverse).schur(full, full, i, j))
    if method != "conjugate":
        raise ValueError(f"unknown method {method!r}")
    value = rc_quasidet(conj_matrix(A), i, j)
    return value if isinstance(value, Undefined) else A.ring.conj(value)


def quasidet_inverse(A: Matrix) -> Matrix | None:
    """RC inverse assembled entrywise from quasideterminants, or ``None`` if singular.

    Entry ``(j, i)`` is ``invert(|A|_ij)``.  For an invertible ``A`` the
    quasideterminant at ``(i, j)`` is undefined exactly when that inverse
    entry is zero.  Singularity is decided by the recursive block inversion
    of the whole matrix, so no elimination is involved anywhere.
    """
    n = A.rows
    if A.cols != n:
        raise ValueError(f"inverse of a non-square {A.rows}x{A.cols} matrix")
    if n == 0:
        return Matrix([], A.ring, rows=0, cols=0)
    inverter = MinorInverter(A)
    full = tuple(range(n))
    if inverter.inverse(full, full) is None:
        return None
    zero = A.ring.zero
    grid = [[zero] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            q = inverter.schur(full, full, i, j)
            if isinstance(q, Undefined):
                continue
            if not q:
                return None
            grid[j][i] = invert(q)
    return Matrix(grid, A.ring, rows=n, cols=n)
