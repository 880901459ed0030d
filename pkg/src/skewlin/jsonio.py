"""JSON forms of scalars, matrices, systems and reports.

A matrix document looks like::

    {"ring": "quaternion", "rows": 2, "cols": 2,
     "entries": [[["1","0","0","0"], ["1","0","0","1"]],
                 [["0","0","1","0"], ["0","1","1","0"]]]}

Quaternion scalars are arrays of four rational strings ``"p"`` or ``"p/q"``;
rational scalars are single strings.  On input a quaternion may also be
written in the text grammar (``"1+k"``).
"""

from __future__ import annotations

import json
from typing import Any

from .matrix import Matrix
from .quasidet import QuasidetResult, Undefined
from .rank import RankReport
from .scalars import DivisionRing, ParseError, get_ring
from .solver import Inconsistent, Parametric, SolveOutcome, Unique

__all__ = [
    "loads",
    "matrix_to_json",
    "matrix_from_json",
    "vector_to_json",
    "vector_from_json",
    "system_from_json",
    "outcome_to_json",
    "outcome_from_json",
    "rank_report_to_json",
    "rank_report_from_json",
    "quasidet_to_json",
]


def loads(text: str) -> Any:
    """``json.loads`` with errors mapped to :class:`ParseError` carrying the offset."""
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc.msg} (line {exc.lineno}, column {exc.colno})", exc.pos) from None


def _require(obj: Any, key: str, where: str) -> Any:
    if not isinstance(obj, dict):
        raise ParseError(f"{where}: expected an object, got {type(obj).__name__}")
    if key not in obj:
        raise ParseError(f"{where}: missing field {key!r}")
    return obj[key]


def matrix_to_json(A: Matrix) -> dict:
    enc = A.ring.to_json
    return {
        "ring": A.ring.name,
        "rows": A.rows,
        "cols": A.cols,
        "entries": [[enc(x) for x in r] for r in A.entries],
    }


def matrix_from_json(obj: Any, where: str = "matrix") -> Matrix:
    ring = get_ring(_require(obj, "ring", where))
    rows = _require(obj, "rows", where)
    cols = _require(obj, "cols", where)
    entries = _require(obj, "entries", where)
    if not (isinstance(rows, int) and isinstance(cols, int)) or rows < 0 or cols < 0:
        raise ParseError(f"{where}: rows/cols must be non-negative integers")
    if not isinstance(entries, list) or len(entries) != rows:
        raise ParseError(f"{where}: expected {rows} rows of entries")
    grid = []
    for i, r in enumerate(entries):
        if not isinstance(r, list) or len(r) != cols:
            raise ParseError(f"{where}: row {i} must have {cols} entries")
        row = []
        for j, x in enumerate(r):
            try:
                row.append(ring.from_json(x))
            except ParseError as exc:
                raise ParseError(f"{where}: entry [{i}][{j}]: {exc.message}", exc.position) from None
        grid.append(row)
    return Matrix(grid, ring, rows=rows, cols=cols)


def vector_to_json(v: Any, ring: DivisionRing) -> list:
    return [ring.to_json(ring.coerce(x)) for x in v]


def vector_from_json(obj: Any, ring: DivisionRing, where: str = "vector") -> tuple:
    """A plain list of scalars, or a single-row / single-column matrix document."""
    if isinstance(obj, dict):
        M = matrix_from_json(obj, where)
        if M.cols == 1:
            return M.col(0)
        if M.rows == 1:
            return M.row(0)
        raise ParseError(f"{where}: expected a single row or column, got {M.rows}x{M.cols}")
    if not isinstance(obj, list):
        raise ParseError(f"{where}: expected a list of scalars")
    out = []
    for i, x in enumerate(obj):
        try:
            out.append(ring.from_json(x))
        except ParseError as exc:
            raise ParseError(f"{where}[{i}]: {exc.message}", exc.position) from None
    return tuple(out)


def system_from_json(obj: Any) -> tuple[Matrix, tuple, str]:
    """``{"A": matrix, "b": column, "side": "left"|"right"}`` -> ``(A, b, side)``."""
    A = matrix_from_json(_require(obj, "A", "system"), "system.A")
    b = vector_from_json(_require(obj, "b", "system"), A.ring, "system.b")
    side = obj.get("side", "right")
    if side not in ("left", "right"):
        raise ParseError(f"system.side must be 'left' or 'right', got {side!r}")
    return A, b, side


def outcome_to_json(outcome: SolveOutcome, ring: DivisionRing) -> dict:
    if isinstance(outcome, Unique):
        return {"outcome": "unique", "solution": vector_to_json(outcome.solution, ring)}
    if isinstance(outcome, Parametric):
        return {
            "outcome": "parametric",
            "particular": vector_to_json(outcome.particular, ring),
            "free": list(outcome.free),
            "basis": [vector_to_json(v, ring) for v in outcome.basis],
            "scalar_side": outcome.scalar_side,
        }
    return {"outcome": "inconsistent", "rank": outcome.rank, "extended_rank": outcome.extended_rank}


def outcome_from_json(obj: Any, ring: DivisionRing) -> SolveOutcome:
    kind = _require(obj, "outcome", "outcome")
    if kind == "unique":
        return Unique(vector_from_json(obj["solution"], ring))
    if kind == "parametric":
        return Parametric(
            vector_from_json(obj["particular"], ring),
            tuple(obj["free"]),
            tuple(vector_from_json(v, ring) for v in obj["basis"]),
            obj.get("scalar_side", "right"),
        )
    if kind == "inconsistent":
        return Inconsistent(obj["rank"], obj["extended_rank"])
    raise ParseError(f"unknown outcome {kind!r}")


def rank_report_to_json(report: RankReport, ring: DivisionRing) -> dict:
    return {
        "product": report.product,
        "rank": report.rank,
        "major_rows": list(report.major_rows),
        "major_cols": list(report.major_cols),
        "row_dependencies": {str(p): vector_to_json(c, ring) for p, c in sorted(report.row_dependencies.items())},
        "col_dependencies": {str(r): vector_to_json(c, ring) for r, c in sorted(report.col_dependencies.items())},
        "row_coefficient_side": report.row_coefficient_side,
        "col_coefficient_side": report.col_coefficient_side,
    }


def rank_report_from_json(obj: Any, ring: DivisionRing) -> RankReport:
    return RankReport(
        _require(obj, "rank", "rank report"),
        tuple(obj["major_rows"]),
        tuple(obj["major_cols"]),
        {int(p): vector_from_json(c, ring) for p, c in obj["row_dependencies"].items()},
        {int(r): vector_from_json(c, ring) for r, c in obj["col_dependencies"].items()},
        obj.get("product", "rc"),
    )


def quasidet_to_json(value: QuasidetResult, ring: DivisionRing) -> dict:
    if isinstance(value, Undefined):
        return {"defined": False, "undefined_minor": {"rows": list(value.rows), "cols": list(value.cols)}}
    return {"defined": True, "value": ring.to_json(ring.coerce(value))}
