"""Gaussian elimination over a division ring using left row operations only.

Every step is a left multiplication by an elementary matrix: swap two rows,
replace a row ``r`` by ``d * r``, or replace ``r`` by ``r - d * p`` for a pivot
row ``p``.  Such steps preserve the solution set of ``A (rc) x = b`` and the
left row span, which is what RC rank and RC inverses are about.

Pivot rule: the first nonzero entry scanning top-to-bottom in the current
column.  Exact arithmetic makes magnitude heuristics pointless.
"""

from __future__ import annotations

from dataclasses import dataclass

from .matrix import Matrix, hstack, identity
from .scalars import Scalar, invert

__all__ = ["Echelon", "row_echelon", "gauss_jordan_inverse"]


@dataclass(frozen=True)
class Echelon:
    """Outcome of forward elimination.

    ``rows`` holds the reduced rows (pivot rows first, zero rows after);
    ``order[t]`` is the original index of the row now at position ``t``;
    ``pivots`` lists ``(position, column)`` of each pivot in order.
    """

    rows: tuple[tuple[Scalar, ...], ...]
    order: tuple[int, ...]
    pivots: tuple[tuple[int, int], ...]

    @property
    def rank(self) -> int:
        return len(self.pivots)

    @property
    def pivot_rows(self) -> tuple[int, ...]:
        """Original indices of the rows that produced pivots, ascending."""
        return tuple(sorted(self.order[t] for t, _ in self.pivots))

    @property
    def pivot_cols(self) -> tuple[int, ...]:
        return tuple(c for _, c in self.pivots)


def _eliminate(
    grid: list[list[Scalar]],
    n_pivot_cols: int,
    *,
    reduce_above: bool,
    stop_on_missing_pivot: bool = False,
) -> tuple[list[int], list[tuple[int, int]], bool]:
    """In-place elimination on ``grid``; returns (order, pivots, complete)."""
    m = len(grid)
    order = list(range(m))
    pivots: list[tuple[int, int]] = []
    r = 0
    for c in range(n_pivot_cols):
        if r == m:
            break
        p = next((t for t in range(r, m) if grid[t][c]), None)
        if p is None:
            if stop_on_missing_pivot:
                return order, pivots, False
            continue
        if p != r:
            grid[r], grid[p] = grid[p], grid[r]
            order[r], order[p] = order[p], order[r]
        prow = grid[r]
        inv = invert(prow[c])
        prow = [inv * x for x in prow]
        grid[r] = prow
        targets = range(m) if reduce_above else range(r + 1, m)
        for t in targets:
            if t == r:
                continue
            f = grid[t][c]
            if f:
                grid[t] = [x - f * y for x, y in zip(grid[t], prow)]
        pivots.append((r, c))
        r += 1
    return order, pivots, True


def row_echelon(A: Matrix) -> Echelon:
    """Forward elimination with left row operations, tracking original rows."""
    grid = [list(r) for r in A.entries]
    order, pivots, _ = _eliminate(grid, A.cols, reduce_above=False)
    return Echelon(tuple(tuple(A.ring.coerce(x) for x in r) for r in grid), tuple(order), tuple(pivots))


def gauss_jordan_inverse(A: Matrix) -> Matrix | None:
    """Two-sided RC inverse of a square ``A``, or ``None`` when ``A`` is RC-singular.

    Reduces ``[A | I]`` to ``[I | B]``; the accumulated left multiplications
    give ``B (rc) A = I``, and over a division ring a one-sided inverse of a
    square matrix is two-sided.
    """
    n = A.rows
    if A.cols != n:
        raise ValueError(f"inverse of a non-square {A.rows}x{A.cols} matrix")
    aug = hstack(A, identity(n, A.ring))
    grid = [list(r) for r in aug.entries]
    _, pivots, complete = _eliminate(grid, n, reduce_above=True, stop_on_missing_pivot=True)
    if not complete or len(pivots) < n:
        return None
    return Matrix([r[n:] for r in grid], A.ring, rows=n, cols=n)
