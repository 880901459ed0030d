"""The 2x2 quaternion matrix that is RC-singular but CR-nonsingular.

With ``b = 1 + k`` and ``c = j`` the matrix ``[[1, b], [c, c b]]`` has its
second row equal to ``j`` times the first (a left dependency), so it has no
RC inverse, while no right multiple of the first row reproduces the second,
so it does have a CR inverse.  One matrix therefore separates the RC and CR
general linear groups of size 2.
"""

from __future__ import annotations

from .matrix import Matrix, cr_mul, identity
from .quasidet import Undefined, cr_quasidet, rc_quasidet
from .rank import cr_rank, rc_rank, verify_certificates
from .scalars import QUATERNIONS, Quaternion, parse_scalar
from .solver import Inconsistent, Parametric, Unique, cr_inverse, rc_inverse, solve_general
from .spaces import Orientation

__all__ = ["witness_matrix", "demo_paper_example", "render_demo", "DemoFailure"]

B = parse_scalar("1+k")
C = parse_scalar("j")
D = parse_scalar("k")


class DemoFailure(AssertionError):
    """A verification inside the demo did not hold."""


def witness_matrix(b: Quaternion = B, c: Quaternion = C) -> Matrix:
    return Matrix([[1, b], [c, c * b]], QUATERNIONS)


def _check(cond: bool, what: str, checks: dict[str, bool]) -> None:
    checks[what] = bool(cond)
    if not cond:
        raise DemoFailure(what)


def demo_paper_example() -> dict:
    """Build the witness, verify every claim about it, and return the findings.

    Raises :class:`DemoFailure` if any verification fails.
    """
    W = witness_matrix()
    I2 = identity(2, QUATERNIONS)
    checks: dict[str, bool] = {}

    rc = rc_rank(W)
    cr = cr_rank(W)
    _check(rc.rank == 1, "RC rank is 1", checks)
    _check(cr.rank == 2, "CR rank is 2", checks)
    _check(verify_certificates(W, rc), "RC dependency certificates re-multiply exactly", checks)
    _check(rc.row_dependencies == {1: (C,)}, "row 1 = j * row 0 (left coefficient)", checks)

    q_rc = rc_quasidet(W, 1, 1)
    q_cr = cr_quasidet(W, 1, 1)
    _check(not isinstance(q_rc, Undefined) and q_rc == 0, "RC quasideterminant at (1,1) is 0", checks)
    _check(q_cr == parse_scalar("2i"), "CR quasideterminant at (1,1) is 2i", checks)

    _check(rc_inverse(W) is None, "no RC inverse exists", checks)
    Wcr = cr_inverse(W)
    _check(Wcr is not None, "CR inverse exists", checks)
    left = cr_mul(Wcr, W)
    right = cr_mul(W, Wcr)
    _check(left == I2 and right == I2, "CR inverse is two-sided", checks)

    systems = {}
    zero = (0, 0)
    for o in Orientation:
        out = solve_general(W, zero, o.side, o.product)
        singular = (rc if o.product == "rc" else cr).rank < 2
        _check(isinstance(out, Parametric) == singular, f"{o.name.lower()} homogeneous system matches singularity", checks)
        systems[o.name.lower()] = {
            "form": "x * W = 0" if o.side == "left" else "W * x = 0",
            "product": o.product,
            "singular": singular,
            "outcome": out,
        }

    return {
        "scalars": {"b": B, "c": C, "d": D},
        "witness": W,
        "rc_rank": rc,
        "cr_rank": cr,
        "rc_quasidet_11": q_rc,
        "cr_quasidet_11": q_cr,
        "cr_inverse": Wcr,
        "cr_inverse_check": {"left": left, "right": right},
        "systems": systems,
        "checks": checks,
    }


def _fmt_outcome(out) -> str:
    if isinstance(out, Unique):
        return "unique solution (" + ", ".join(str(v) for v in out.solution) + ")"
    if isinstance(out, Parametric):
        vecs = "; ".join("(" + ", ".join(str(v) for v in vec) + ")" for vec in out.basis)
        return f"{len(out.free)} free variable(s) {list(out.free)}, kernel basis {vecs}, scalars on the {out.scalar_side}"
    if isinstance(out, Inconsistent):
        return f"inconsistent (rank {out.rank} vs {out.extended_rank})"
    return str(out)


def render_demo(report: dict) -> str:
    W = report["witness"]
    rc = report["rc_rank"]
    lines = [
        f"Scalars b = {report['scalars']['b']}, c = {report['scalars']['c']}, d = {report['scalars']['d']}; the witness uses b and c.",
        "",
        "W = [[1, b], [c, c b]] =",
        str(W),
        "",
        f"RC rank: {rc.rank}   major minor rows {list(rc.major_rows)} x cols {list(rc.major_cols)}",
    ]
    for p, coeffs in sorted(rc.row_dependencies.items()):
        terms = " + ".join(f"({c}) * row {s}" for c, s in zip(coeffs, rc.major_rows))
        lines.append(f"  row {p} = {terms}")
    for r, coeffs in sorted(rc.col_dependencies.items()):
        terms = " + ".join(f"col {t} * ({c})" for c, t in zip(coeffs, rc.major_cols))
        lines.append(f"  col {r} = {terms}")
    lines += [
        f"CR rank: {report['cr_rank'].rank}",
        "",
        f"RC quasideterminant |W|_11 = {report['rc_quasidet_11']}",
        f"CR quasideterminant |W|_11 = {report['cr_quasidet_11']}",
        "",
        "RC inverse: none (W is RC-singular)",
        "CR inverse:",
        str(report["cr_inverse"]),
        "W^-1 (cr) W =",
        str(report["cr_inverse_check"]["left"]),
        "W (cr) W^-1 =",
        str(report["cr_inverse_check"]["right"]),
        "",
        "Homogeneous systems with matrix W:",
    ]
    for name, s in report["systems"].items():
        kind = "singular" if s["singular"] else "nonsingular"
        lines.append(f"  {name}: {s['form']} ({s['product'].upper()}, {kind}): {_fmt_outcome(s['outcome'])}")
    lines += ["", "Checks:"]
    lines += [f"  [{'ok' if ok else 'FAIL'}] {name}" for name, ok in report["checks"].items()]
    return "\n".join(lines)

