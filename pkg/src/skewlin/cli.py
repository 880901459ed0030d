"""Command-line front end.

Exit status: 0 on success, 1 when the answer is a mathematical negative
(singular matrix, inconsistent system, vector outside the span, dependent
family, undefined quasideterminant), 2 on malformed input or bad usage.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Any, Callable, TextIO

from .jsonio import (
    loads,
    matrix_from_json,
    matrix_to_json,
    outcome_to_json,
    quasidet_to_json,
    rank_report_to_json,
    system_from_json,
    vector_from_json,
    vector_to_json,
)
from .matrix import DimensionError, Matrix
from .quasidet import Undefined, cr_quasidet, rc_quasidet
from .rank import is_singular, rank
from .scalars import ParseError, format_scalar
from .solver import Inconsistent, Parametric, Unique, inverse, solve_general
from .spaces import Basis, Orientation, VectorFamily, coordinates, extract_basis, family_rank, in_span
from .witness import DemoFailure, demo_paper_example, render_demo

__all__ = ["run", "main"]

EXIT_OK, EXIT_NEGATIVE, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # type: ignore[override]
        raise UsageError(f"{self.prog}: {message}")


class _Negative(Exception):
    """Carries output for a run that ends with exit status 1."""

    def __init__(self, payload: Any, text: str) -> None:
        super().__init__(text)
        self.payload = payload
        self.text = text


def _build_parser() -> _Parser:
    parser = _Parser(prog="skewlin", description="Exact linear algebra over the rational quaternions.")
    verbs = parser.add_subparsers(dest="verb", metavar="VERB", required=True)

    def verb(name: str, help: str, *, product: bool = False, space: bool = False, takes_input: bool = True) -> _Parser:
        p = verbs.add_parser(name, help=help, description=help)
        p.add_argument("--format", choices=("json", "text"), default="json")
        if product:
            p.add_argument("--product", type=str.lower, choices=("rc", "cr"), default="rc")
        if space:
            p.add_argument("--space", type=str.lower, choices=("rcd", "crd", "drc", "dcr"), default="rcd")
        if takes_input:
            p.add_argument("input", nargs="?", default="-", help="JSON file, or - for stdin (default)")
        return p

    verb("solve", "solve a system {A, b, side}", product=True)
    verb("inverse", "invert a square matrix", product=True)
    verb("rank", "rank with major minor and dependency certificates", product=True)
    q = verb("quasidet", "quasideterminants of a square matrix", product=True)
    q.add_argument("-i", "--row", type=int)
    q.add_argument("-j", "--col", type=int)
    verb("singular-check", "decide whether a square matrix is singular", product=True)
    verb("span", "express a vector through a family {family, vector}", space=True)
    verb("independent", "test a family {family} for independence", space=True)
    verb("coords", "coordinates of a vector in a basis {basis, vector}", space=True)
    verb("demo", "verify the RC-singular, CR-nonsingular witness", takes_input=False)
    verb("selftest", "randomized property check (seed from SKEWLIN_SEED)", takes_input=False)
    return parser


def _read_document(path: str, stdin: TextIO) -> Any:
    if path == "-":
        text = stdin.read()
    else:
        try:
            with open(path, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise UsageError(f"cannot read {path}: {exc.strerror}") from None
        except UnicodeDecodeError as exc:
            raise ParseError(f"{path} is not UTF-8", exc.start) from None
    return loads(text)


def _matrix_arg(doc: Any, key: str) -> Matrix:
    """A bare matrix document, or one nested under ``key``."""
    if isinstance(doc, dict) and key in doc and "entries" not in doc:
        return matrix_from_json(doc[key], key)
    return matrix_from_json(doc)


def _square(A: Matrix) -> None:
    if not A.is_square():
        raise DimensionError(f"expected a square matrix, got {A.rows}x{A.cols}")


def _vec_text(v) -> str:
    return "(" + ", ".join(format_scalar(x) for x in v) + ")"


# ---------------------------------------------------------------------------
# verbs; each returns (json payload, text rendering) or raises _Negative


def _cmd_solve(args, doc) -> tuple[Any, str]:
    A, b, side = system_from_json(doc)
    out = solve_general(A, b, side, args.product)
    payload = {"product": args.product, "side": side, **outcome_to_json(out, A.ring)}
    if isinstance(out, Unique):
        return payload, f"unique solution {_vec_text(out.solution)}"
    if isinstance(out, Parametric):
        lines = [
            f"parametric: {len(out.free)} free unknown(s) {list(out.free)}, scalars act on the {out.scalar_side}",
            f"particular {_vec_text(out.particular)}",
        ]
        lines += [f"basis {_vec_text(v)}" for v in out.basis]
        return payload, "\n".join(lines)
    assert isinstance(out, Inconsistent)
    raise _Negative(payload, f"inconsistent: rank {out.rank}, extended rank {out.extended_rank}")


def _cmd_inverse(args, doc) -> tuple[Any, str]:
    A = _matrix_arg(doc, "A")
    _square(A)
    inv = inverse(A, args.product)
    if inv is None:
        raise _Negative({"product": args.product, "invertible": False}, f"matrix is {args.product.upper()}-singular")
    return {"product": args.product, "invertible": True, "inverse": matrix_to_json(inv)}, str(inv)


def _cmd_rank(args, doc) -> tuple[Any, str]:
    A = _matrix_arg(doc, "A")
    rep = rank(A, args.product)
    lines = [
        f"{args.product.upper()} rank {rep.rank}",
        f"major minor rows {list(rep.major_rows)} cols {list(rep.major_cols)}",
    ]
    for p, c in sorted(rep.row_dependencies.items()):
        lines.append(f"row {p} = {_vec_text(c)} on the {rep.row_coefficient_side} of rows {list(rep.major_rows)}")
    for r, c in sorted(rep.col_dependencies.items()):
        lines.append(f"col {r} = {_vec_text(c)} on the {rep.col_coefficient_side} of cols {list(rep.major_cols)}")
    return rank_report_to_json(rep, A.ring), "\n".join(lines)


def _cmd_quasidet(args, doc) -> tuple[Any, str]:
    A = _matrix_arg(doc, "A")
    _square(A)
    fn: Callable = rc_quasidet if args.product == "rc" else cr_quasidet
    rows = [args.row] if args.row is not None else range(A.rows)
    cols = [args.col] if args.col is not None else range(A.cols)
    for i in rows:
        if not 0 <= i < A.rows:
            raise DimensionError(f"row index {i} out of range for {A.rows}x{A.cols}")
    for j in cols:
        if not 0 <= j < A.cols:
            raise DimensionError(f"column index {j} out of range for {A.rows}x{A.cols}")
    entries, lines = [], []
    for i in rows:
        for j in cols:
            q = fn(A, i, j)
            entries.append({"row": i, "col": j, **quasidet_to_json(q, A.ring)})
            shown = f"undefined ({q.reason})" if isinstance(q, Undefined) else format_scalar(q)
            lines.append(f"|A|_{i}{j} = {shown}")
    payload = {"product": args.product, "quasideterminants": entries}
    text = "\n".join(lines)
    if args.row is not None and args.col is not None and not entries[0]["defined"]:
        raise _Negative(payload, text)
    return payload, text


def _cmd_singular(args, doc) -> tuple[Any, str]:
    A = _matrix_arg(doc, "A")
    _square(A)
    singular = is_singular(A, args.product)
    payload = {"product": args.product, "singular": singular}
    text = f"{args.product.upper()}-{'singular' if singular else 'nonsingular'}"
    if singular:
        raise _Negative(payload, text)
    return payload, text


def _family(doc: Any, key: str, orientation: Orientation) -> VectorFamily:
    return VectorFamily(_matrix_arg(doc, key), orientation)


def _cmd_span(args, doc) -> tuple[Any, str]:
    o = Orientation.parse(args.space)
    if not isinstance(doc, dict) or "vector" not in doc:
        raise ParseError("span input needs fields 'family' and 'vector'")
    F = _family(doc, "family", o)
    v = vector_from_json(doc["vector"], F.coords.ring, "vector")
    coeffs = in_span(F, v)
    if coeffs is None:
        raise _Negative({"space": args.space, "in_span": False}, "vector is not in the span")
    payload = {"space": args.space, "in_span": True, "coefficients": vector_to_json(coeffs, F.coords.ring)}
    return payload, f"in span, coefficients {_vec_text(coeffs)}"


def _cmd_independent(args, doc) -> tuple[Any, str]:
    o = Orientation.parse(args.space)
    F = _family(doc, "family", o)
    r = family_rank(F)
    chosen = extract_basis(F)
    ok = r == F.count
    payload = {"space": args.space, "independent": ok, "rank": r, "basis_indices": chosen}
    text = f"{'independent' if ok else 'dependent'}: rank {r} of {F.count} vectors, basis {chosen}"
    if not ok:
        raise _Negative(payload, text)
    return payload, text


def _cmd_coords(args, doc) -> tuple[Any, str]:
    o = Orientation.parse(args.space)
    if not isinstance(doc, dict) or "vector" not in doc or "basis" not in doc:
        raise ParseError("coords input needs fields 'basis' and 'vector'")
    M = matrix_from_json(doc["basis"], "basis")
    v = vector_from_json(doc["vector"], M.ring, "vector")
    try:
        B = Basis(M, o)
    except ValueError as exc:
        if isinstance(exc, DimensionError):
            raise
        raise _Negative({"space": args.space, "basis": False}, str(exc)) from None
    c = coordinates(B, v)
    return {"space": args.space, "coordinates": vector_to_json(c, M.ring)}, f"coordinates {_vec_text(c)}"


def _demo_json(report: dict) -> dict:
    W = report["witness"]
    ring = W.ring
    return {
        "witness": matrix_to_json(W),
        "rc_rank": rank_report_to_json(report["rc_rank"], ring),
        "cr_rank": rank_report_to_json(report["cr_rank"], ring),
        "rc_quasidet_11": quasidet_to_json(report["rc_quasidet_11"], ring),
        "cr_quasidet_11": quasidet_to_json(report["cr_quasidet_11"], ring),
        "cr_inverse": matrix_to_json(report["cr_inverse"]),
        "systems": {
            name: {"form": s["form"], "product": s["product"], "singular": s["singular"],
                   **outcome_to_json(s["outcome"], ring)}
            for name, s in report["systems"].items()
        },
        "checks": report["checks"],
    }


def _cmd_demo(args, doc) -> tuple[Any, str]:
    report = demo_paper_example()
    return _demo_json(report), render_demo(report)


def _cmd_selftest(args, doc) -> tuple[Any, str]:
    from .selftest import run_selftest

    raw = os.environ.get("SKEWLIN_SEED", "0")
    try:
        seed = int(raw)
    except ValueError:
        raise UsageError(f"SKEWLIN_SEED must be an integer, got {raw!r}") from None
    results = run_selftest(seed)
    payload = {"seed": seed, "results": {name: ok for name, ok in results}}
    text = "\n".join([f"seed {seed}"] + [f"[{'ok' if ok else 'FAIL'}] {name}" for name, ok in results])
    if not all(ok for _, ok in results):
        raise _Negative(payload, text)
    return payload, text


_COMMANDS = {
    "solve": _cmd_solve,
    "inverse": _cmd_inverse,
    "rank": _cmd_rank,
    "quasidet": _cmd_quasidet,
    "singular-check": _cmd_singular,
    "span": _cmd_span,
    "independent": _cmd_independent,
    "coords": _cmd_coords,
    "demo": _cmd_demo,
    "selftest": _cmd_selftest,
}


def _emit(stream: TextIO, fmt: str, payload: Any, text: str) -> None:
    if fmt == "json":
        stream.write(json.dumps(payload, indent=2, sort_keys=True) + "\n")
    else:
        stream.write(text + "\n")


def run(argv: list[str] | None = None, stdout: TextIO | None = None, stderr: TextIO | None = None,
        stdin: TextIO | None = None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    stdin = stdin or sys.stdin
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        stderr.write(f"{exc}\n")
        return EXIT_USAGE
    except SystemExit as exc:  # --help
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE

    label = getattr(args, "input", None)
    try:
        doc = _read_document(args.input, stdin) if label is not None else None
        payload, text = _COMMANDS[args.verb](args, doc)
    except _Negative as neg:
        _emit(stdout, args.format, neg.payload, neg.text)
        return EXIT_NEGATIVE
    except DemoFailure as exc:
        stderr.write(f"demo verification failed: {exc}\n")
        return EXIT_NEGATIVE
    except (ParseError, UsageError, DimensionError, ValueError, TypeError) as exc:
        where = "stdin" if label == "-" else label
        prefix = f"{where}: " if where else ""
        stderr.write(f"skewlin {args.verb}: {prefix}{exc}\n")
        return EXIT_USAGE
    _emit(stdout, args.format, payload, text)
    return EXIT_OK


def main() -> None:
    sys.exit(run())
