"""Dense immutable matrices over a division ring, with RC and CR products.

``rc_mul(A, B)[i][j] = sum_k A[i][k] * B[k][j]`` keeps the scalar factors in
the written order; ``cr_mul`` uses the same index pattern with the factor
order reversed.  Three transports relate them and serve as mutual oracles::

    transpose(rc_mul(A, B))   == cr_mul(transpose(B), transpose(A))
    cr_mul(A, B)              == conj_matrix(rc_mul(conj_matrix(A), conj_matrix(B)))
    cr_mul(A, B)              == opposite_mul(A, B)
"""

from __future__ import annotations

from typing import Any, Callable, Iterable, Iterator, Sequence

from .scalars import QUATERNIONS, RATIONALS, DivisionRing, Quaternion, Scalar, ring_of

__all__ = [
    "Matrix",
    "DimensionError",
    "rc_mul",
    "cr_mul",
    "opposite_mul",
    "product",
    "transpose",
    "conj_matrix",
    "submatrix",
    "add",
    "sub",
    "scale_left",
    "scale_right",
    "identity",
    "zeros",
    "column",
    "row_vector",
    "hstack",
    "vstack",
    "check_index_set",
]


class DimensionError(ValueError):
    """Operand shapes are incompatible."""


class Matrix:
    """An ``rows x cols`` grid of canonical scalars from ``ring``.

    Empty shapes (``0 x n`` and ``m x 0``) are legal; pass ``rows``/``cols``
    explicitly when ``entries`` cannot carry them.
    """

    __slots__ = ("ring", "rows", "cols", "_data")

    def __init__(
        self,
        entries: Iterable[Iterable[Any]] = (),
        ring: DivisionRing | str | None = None,
        *,
        rows: int | None = None,
        cols: int | None = None,
    ) -> None:
        grid = [list(r) for r in entries]
        if isinstance(ring, str):
            from .scalars import get_ring

            ring = get_ring(ring)
        if ring is None:
            ring = ring_of(*(x for r in grid for x in r))
        if rows is None:
            rows = len(grid)
        if not grid:
            grid = [[] for _ in range(rows)]
        if len(grid) != rows:
            raise DimensionError(f"declared {rows} rows, got {len(grid)}")
        if cols is None:
            cols = len(grid[0]) if grid else 0
        if any(len(r) != cols for r in grid):
            raise DimensionError(f"every row must have {cols} entries")
        nrows, ncols = rows, cols
        coerce = ring.coerce
        self.ring = ring
        self.rows = nrows
        self.cols = ncols
        self._data = tuple(tuple(coerce(x) for x in r) for r in grid)

    @classmethod
    def _trusted(cls, data: tuple[tuple[Scalar, ...], ...], ring: DivisionRing, rows: int, cols: int) -> Matrix:
        m = object.__new__(cls)
        m.ring, m.rows, m.cols, m._data = ring, rows, cols, data
        return m

    @classmethod
    def from_function(cls, rows: int, cols: int, fn: Callable[[int, int], Any], ring: DivisionRing | None = None) -> Matrix:
        return cls([[fn(i, j) for j in range(cols)] for i in range(rows)], ring, rows=rows, cols=cols)

    # access ---------------------------------------------------------------

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    @property
    def entries(self) -> tuple[tuple[Scalar, ...], ...]:
        return self._data

    def __getitem__(self, index: tuple[int, int]) -> Scalar:
        i, j = index
        return self._data[i][j]

    def row(self, i: int) -> tuple[Scalar, ...]:
        return self._data[i]

    def col(self, j: int) -> tuple[Scalar, ...]:
        return tuple(r[j] for r in self._data)

    def __iter__(self) -> Iterator[tuple[Scalar, ...]]:
        return iter(self._data)

    def is_square(self) -> bool:
        return self.rows == self.cols

    def is_zero(self) -> bool:
        return not any(x for r in self._data for x in r)

    def as_ring(self, ring: DivisionRing) -> Matrix:
        if ring is self.ring:
            return self
        return Matrix(self._data, ring, rows=self.rows, cols=self.cols)

    # arithmetic sugar -------------------------------------------------------

    def __add__(self, other: Matrix) -> Matrix:
        return add(self, other)

    def __sub__(self, other: Matrix) -> Matrix:
        return sub(self, other)

    def __neg__(self) -> Matrix:
        return self.map(lambda x: -x)

    def __matmul__(self, other: Matrix) -> Matrix:
        return rc_mul(self, other)

    @property
    def T(self) -> Matrix:
        return transpose(self)

    def map(self, fn: Callable[[Scalar], Any]) -> Matrix:
        return Matrix([[fn(x) for x in r] for r in self._data], self.ring, rows=self.rows, cols=self.cols)

    # equality ---------------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and self._data == other._data

    def __hash__(self) -> int:
        return hash((self.shape, self._data))

    def __repr__(self) -> str:
        body = ", ".join("[" + ", ".join(repr(str(x)) for x in r) + "]" for r in self._data)
        return f"Matrix([{body}], {self.ring.name!r}, rows={self.rows}, cols={self.cols})"

    def __str__(self) -> str:
        if not self.rows or not self.cols:
            return f"[] ({self.rows}x{self.cols})"
        cells = [[self.ring.format(x) for x in r] for r in self._data]
        width = [max(len(cells[i][j]) for i in range(self.rows)) for j in range(self.cols)]
        return "\n".join("[ " + "  ".join(c.rjust(w) for c, w in zip(r, width)) + " ]" for r in cells)


# ---------------------------------------------------------------------------
# construction helpers


def _ring(*ms: Matrix) -> DivisionRing:
    return QUATERNIONS if any(m.ring is QUATERNIONS for m in ms) else RATIONALS


def identity(n: int, ring: DivisionRing = RATIONALS) -> Matrix:
    z, o = ring.zero, ring.one
    return Matrix._trusted(tuple(tuple(o if i == j else z for j in range(n)) for i in range(n)), ring, n, n)


def zeros(rows: int, cols: int, ring: DivisionRing = RATIONALS) -> Matrix:
    z = ring.zero
    return Matrix._trusted(tuple(tuple(z for _ in range(cols)) for _ in range(rows)), ring, rows, cols)


def column(values: Sequence[Any], ring: DivisionRing | None = None) -> Matrix:
    return Matrix([[v] for v in values], ring, rows=len(values), cols=1)


def row_vector(values: Sequence[Any], ring: DivisionRing | None = None) -> Matrix:
    return Matrix([list(values)], ring, rows=1, cols=len(values))


def hstack(*ms: Matrix) -> Matrix:
    rows = ms[0].rows
    if any(m.rows != rows for m in ms):
        raise DimensionError("hstack: row counts differ")
    ring = _ring(*ms)
    return Matrix([sum((m.row(i) for m in ms), ()) for i in range(rows)], ring, rows=rows, cols=sum(m.cols for m in ms))


def vstack(*ms: Matrix) -> Matrix:
    cols = ms[0].cols
    if any(m.cols != cols for m in ms):
        raise DimensionError("vstack: column counts differ")
    ring = _ring(*ms)
    return Matrix([r for m in ms for r in m], ring, rows=sum(m.rows for m in ms), cols=cols)


# ---------------------------------------------------------------------------
# products


def product(A: Matrix, B: Matrix, mul: Callable[[Scalar, Scalar], Scalar]) -> Matrix:
    """``C[i][j] = sum_k mul(A[i][k], B[k][j])`` for an arbitrary scalar product."""
    if A.cols != B.rows:
        raise DimensionError(f"cannot multiply {A.rows}x{A.cols} by {B.rows}x{B.cols}")
    ring = _ring(A, B)
    zero = ring.zero
    bcols = [B.col(j) for j in range(B.cols)]
    data = []
    for arow in A.entries:
        out = []
        for bcol in bcols:
            acc = zero
            for a, b in zip(arow, bcol):
                if a and b:
                    acc = acc + mul(a, b)
            out.append(ring.coerce(acc))
        data.append(tuple(out))
    return Matrix._trusted(tuple(data), ring, A.rows, B.cols)


def _forward(a: Scalar, b: Scalar) -> Scalar:
    return a * b


def _reverse(a: Scalar, b: Scalar) -> Scalar:
    return b * a


def rc_mul(A: Matrix, B: Matrix) -> Matrix:
    """RC product: ``A``'s entry on the left of every scalar product."""
    return product(A, B, _forward)


def cr_mul(A: Matrix, B: Matrix) -> Matrix:
    """CR product: ``C[i][j] = sum_k B[k][j] * A[i][k]``."""
    if A.cols != B.rows:
        raise DimensionError(f"cannot multiply {A.rows}x{A.cols} by {B.rows}x{B.cols}")
    # Written out directly rather than via product() so the opposite-ring
    # oracle below stays a genuinely separate code path.
    ring = _ring(A, B)
    zero = ring.zero
    data = tuple(
        tuple(
            ring.coerce(sum((B[k, j] * A[i, k] for k in range(A.cols)), zero))
            for j in range(B.cols)
        )
        for i in range(A.rows)
    )
    return Matrix._trusted(data, ring, A.rows, B.cols)


def opposite_mul(A: Matrix, B: Matrix) -> Matrix:
    """RC product computed in the opposite ring (scalar multiplication reversed)."""
    return product(A, B, _reverse)


# ---------------------------------------------------------------------------
# transports


def transpose(A: Matrix) -> Matrix:
    data = tuple(tuple(A[i, j] for i in range(A.rows)) for j in range(A.cols))
    return Matrix._trusted(data, A.ring, A.cols, A.rows)


def conj_matrix(A: Matrix) -> Matrix:
    """Entrywise conjugation (an anti-automorphism applied to every entry)."""
    c = A.ring.conj
    return Matrix._trusted(tuple(tuple(c(x) for x in r) for r in A.entries), A.ring, A.rows, A.cols)


def check_index_set(indices: Sequence[int], bound: int, what: str = "index") -> tuple[int, ...]:
    idx = tuple(indices)
    if any(not 0 <= i < bound for i in idx):
        raise IndexError(f"{what} set {idx} out of range for dimension {bound}")
    if any(a >= b for a, b in zip(idx, idx[1:])):
        raise ValueError(f"{what} set {idx} must be strictly increasing")
    return idx


def submatrix(A: Matrix, rows: Sequence[int], cols: Sequence[int]) -> Matrix:
    """The minor selected by ``rows`` x ``cols``, order preserved."""
    rows = check_index_set(rows, A.rows, "row")
    cols = check_index_set(cols, A.cols, "column")
    data = tuple(tuple(A[r, c] for c in cols) for r in rows)
    return Matrix._trusted(data, A.ring, len(rows), len(cols))


def add(A: Matrix, B: Matrix) -> Matrix:
    if A.shape != B.shape:
        raise DimensionError(f"cannot add {A.shape} and {B.shape}")
    ring = _ring(A, B)
    return Matrix([[a + b for a, b in zip(ra, rb)] for ra, rb in zip(A, B)], ring, rows=A.rows, cols=A.cols)


def sub(A: Matrix, B: Matrix) -> Matrix:
    if A.shape != B.shape:
        raise DimensionError(f"cannot subtract {B.shape} from {A.shape}")
    ring = _ring(A, B)
    return Matrix([[a - b for a, b in zip(ra, rb)] for ra, rb in zip(A, B)], ring, rows=A.rows, cols=A.cols)


def scale_left(d: Any, A: Matrix) -> Matrix:
    """``d * A``: every entry multiplied by ``d`` on the left."""
    ring = QUATERNIONS if isinstance(d, Quaternion) or A.ring is QUATERNIONS else RATIONALS
    d = ring.coerce(d)
    return Matrix([[d * x for x in r] for r in A], ring, rows=A.rows, cols=A.cols)


def scale_right(A: Matrix, d: Any) -> Matrix:
    """``A * d``: every entry multiplied by ``d`` on the right."""
    ring = QUATERNIONS if isinstance(d, Quaternion) or A.ring is QUATERNIONS else RATIONALS
    d = ring.coerce(d)
    return Matrix([[x * d for x in r] for r in A], ring, rows=A.rows, cols=A.cols)
