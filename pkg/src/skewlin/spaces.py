"""Finite-dimensional vector spaces over a division ring.

A vector is its coordinate tuple in some ambient basis; a family of vectors
is the matrix whose rows are those tuples.  The orientation fixes how
coefficients combine with the family:

    ======  ========================  ===============
    name    combination of family F    scalars act on
    ======  ========================  ===============
    rcd     c (rc) F                  left
    crd     c (cr) F                  right
    drc     F^T (rc) c                right
    dcr     F^T (cr) c                left
    ======  ========================  ===============

``rcd``/``dcr`` (and likewise ``crd``/``drc``) agree on every verdict; they
differ only in whether coordinates are written as rows or as columns.
Subspaces are always handled as spanning families.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Any, Sequence

from .matrix import DimensionError, Matrix, cr_mul, identity, rc_mul, transpose
from .rank import rank as _rank
from .rank import is_singular
from .solver import (
    Inconsistent,
    SingularMatrixError,
    Unique,
    apply_system,
    canonical_system,
    inverse,
    solve_general,
    solve_nonsingular,
)
from .scalars import Scalar

__all__ = [
    "Orientation",
    "VectorFamily",
    "Basis",
    "LinearMap",
    "family_rank",
    "is_independent",
    "in_span",
    "combine",
    "extract_basis",
    "dimension",
    "coordinates",
    "change_of_basis",
    "transform_coordinates",
    "apply_map",
    "compose_maps",
    "inverse_map",
    "identity_map",
    "automorphism_check",
]

Vector = tuple[Scalar, ...]


class Orientation(Enum):
    RCD = ("left", "rc")
    CRD = ("left", "cr")
    DRC = ("right", "rc")
    DCR = ("right", "cr")

    @property
    def side(self) -> str:
        """Where the coefficient vector sits relative to the family matrix."""
        return self.value[0]

    @property
    def product(self) -> str:
        return self.value[1]

    @property
    def scalar_side(self) -> str:
        return "left" if self in (Orientation.RCD, Orientation.DCR) else "right"

    @classmethod
    def parse(cls, name: str | Orientation) -> Orientation:
        if isinstance(name, Orientation):
            return name
        try:
            return cls[name.upper()]
        except KeyError:
            raise ValueError(f"unknown space type {name!r}; expected rcd, crd, drc or dcr") from None


@dataclass(frozen=True)
class VectorFamily:
    """Vectors given as the rows of ``coords``, combined per ``orientation``."""

    coords: Matrix
    orientation: Orientation = Orientation.RCD

    def __post_init__(self) -> None:
        object.__setattr__(self, "orientation", Orientation.parse(self.orientation))

    @classmethod
    def of(cls, vectors: Sequence[Sequence[Any]], orientation: Orientation | str = Orientation.RCD, dim: int | None = None) -> VectorFamily:
        if dim is None:
            dim = len(vectors[0]) if vectors else 0
        return cls(Matrix(vectors, rows=len(vectors), cols=dim), Orientation.parse(orientation))

    @property
    def count(self) -> int:
        return self.coords.rows

    @property
    def dim(self) -> int:
        """Dimension of the ambient coordinate space."""
        return self.coords.cols

    def vector(self, s: int) -> Vector:
        return self.coords.row(s)

    def system_matrix(self) -> Matrix:
        """The matrix ``A`` such that combining coefficients ``c`` is ``apply_system(A, c)``."""
        return self.coords if self.orientation.side == "left" else transpose(self.coords)

    def subfamily(self, indices: Sequence[int]) -> VectorFamily:
        return VectorFamily(
            Matrix([self.vector(s) for s in indices], self.coords.ring, rows=len(indices), cols=self.dim),
            self.orientation,
        )


class Basis(VectorFamily):
    """A family of ``n`` independent vectors in an ``n``-dimensional space."""

    def __post_init__(self) -> None:
        super().__post_init__()
        if self.count != self.dim:
            raise DimensionError(f"a basis of a {self.dim}-dimensional space needs {self.dim} vectors, got {self.count}")
        if not is_independent(self):
            raise ValueError("vectors are linearly dependent; not a basis")

    @classmethod
    def standard(cls, n: int, orientation: Orientation | str = Orientation.RCD, ring=None) -> Basis:
        from .scalars import RATIONALS

        return cls(identity(n, ring or RATIONALS), Orientation.parse(orientation))


def _solve(F: VectorFamily, v: Sequence[Any]):
    o = F.orientation
    if len(v) != F.dim:
        raise DimensionError(f"vector has {len(v)} coordinates, family lives in dimension {F.dim}")
    return solve_general(F.system_matrix(), tuple(v), o.side, o.product)


def combine(F: VectorFamily, coeffs: Sequence[Any]) -> Vector:
    """The vector obtained by combining ``F`` with ``coeffs``."""
    if len(coeffs) != F.count:
        raise DimensionError(f"{len(coeffs)} coefficients for {F.count} vectors")
    o = F.orientation
    if F.count == 0:
        return tuple([F.coords.ring.zero] * F.dim)
    return apply_system(F.system_matrix(), tuple(coeffs), o.side, o.product)


def family_rank(F: VectorFamily) -> int:
    return _rank(F.system_matrix(), F.orientation.product).rank


def is_independent(F: VectorFamily) -> bool:
    """Only the zero combination vanishes, i.e. the family has full rank."""
    return family_rank(F) == F.count


def in_span(F: VectorFamily, v: Sequence[Any]) -> Vector | None:
    """Coefficients expressing ``v`` through ``F`` (free ones set to zero), or ``None``."""
    out = _solve(F, v)
    if isinstance(out, Inconsistent):
        return None
    return out.solution if isinstance(out, Unique) else out.particular


def extract_basis(F: VectorFamily, order: Sequence[int] | None = None) -> list[int]:
    """Greedy maximal independent subfamily, scanning vectors in ``order``."""
    chosen: list[int] = []
    for s in order if order is not None else range(F.count):
        trial = chosen + [s]
        if family_rank(F.subfamily(trial)) == len(trial):
            chosen = trial
    return chosen


def dimension(F: VectorFamily) -> int:
    """Dimension of the span of ``F``."""
    return family_rank(F)


def coordinates(B: Basis, v: Sequence[Any], method: str = "elimination") -> Vector:
    """The unique expansion of ``v`` in ``B``.

    ``method="quasideterminant"`` solves the same system through
    quasideterminants instead of elimination; the two must coincide.
    """
    if len(v) != B.dim:
        raise DimensionError(f"vector has {len(v)} coordinates, basis lives in dimension {B.dim}")
    if method == "elimination":
        out = _solve(B, v)
        if not isinstance(out, Unique):
            raise SingularMatrixError("family is not a basis")
        return out.solution
    if method == "quasideterminant":
        o = B.orientation
        M, b, back = canonical_system(B.system_matrix(), tuple(v), o.side, o.product)
        return back(solve_nonsingular(M, b, method="quasideterminant"))
    raise ValueError(f"unknown method {method!r}")


def change_of_basis(B1: Basis, B2: Basis) -> Matrix:
    """Matrix whose row ``s`` holds the ``B1``-coordinates of ``B2``'s vector ``s``."""
    if B1.dim != B2.dim:
        raise DimensionError(f"bases of different dimensions {B1.dim} and {B2.dim}")
    if B1.orientation is not B2.orientation:
        raise ValueError("bases must share an orientation")
    ring = B1.coords.ring if B2.coords.ring is B1.coords.ring else None
    return Matrix([coordinates(B1, B2.vector(s)) for s in range(B2.count)], ring, rows=B2.count, cols=B1.dim)


def transform_coordinates(T: Matrix, coords2: Sequence[Any], orientation: Orientation | str = Orientation.RCD) -> Vector:
    """``B1``-coordinates from ``B2``-coordinates, with ``T = change_of_basis(B1, B2)``."""
    o = Orientation.parse(orientation)
    return combine(VectorFamily(T, o), coords2)


# ---------------------------------------------------------------------------
# linear maps


@dataclass(frozen=True)
class LinearMap:
    """Linear map given by its matrix relative to fixed bases.

    With a left-side orientation coordinates are rows and the image of ``a``
    is ``a * matrix`` (so ``matrix`` is source x target); with a right-side
    orientation the image is ``matrix * a`` (target x source).
    """

    matrix: Matrix
    orientation: Orientation = Orientation.RCD

    def __post_init__(self) -> None:
        object.__setattr__(self, "orientation", Orientation.parse(self.orientation))

    @property
    def source_dim(self) -> int:
        return self.matrix.rows if self.orientation.side == "left" else self.matrix.cols

    @property
    def target_dim(self) -> int:
        return self.matrix.cols if self.orientation.side == "left" else self.matrix.rows

    def __call__(self, a: Sequence[Any]) -> Vector:
        return apply_map(self, a)


def identity_map(n: int, orientation: Orientation | str = Orientation.RCD, ring=None) -> LinearMap:
    from .scalars import RATIONALS

    return LinearMap(identity(n, ring or RATIONALS), Orientation.parse(orientation))


def apply_map(f: LinearMap, a: Sequence[Any]) -> Vector:
    if len(a) != f.source_dim:
        raise DimensionError(f"map takes {f.source_dim} coordinates, got {len(a)}")
    o = f.orientation
    return apply_system(f.matrix, tuple(a), o.side, o.product)


def compose_maps(f: LinearMap, g: LinearMap) -> LinearMap:
    """The map ``a -> g(f(a))``."""
    if f.orientation is not g.orientation:
        raise ValueError("cannot compose maps of different orientations")
    if f.target_dim != g.source_dim:
        raise DimensionError(f"target dimension {f.target_dim} != source dimension {g.source_dim}")
    mul = rc_mul if f.orientation.product == "rc" else cr_mul
    if f.orientation.side == "left":
        return LinearMap(mul(f.matrix, g.matrix), f.orientation)
    return LinearMap(mul(g.matrix, f.matrix), f.orientation)


def automorphism_check(f: LinearMap) -> bool:
    """Bijective exactly when the matrix is nonsingular under the orientation's product."""
    if f.source_dim != f.target_dim:
        raise DimensionError(f"an automorphism needs equal dimensions, got {f.source_dim} -> {f.target_dim}")
    return not is_singular(f.matrix, f.orientation.product)


def inverse_map(f: LinearMap) -> LinearMap:
    inv = inverse(f.matrix, f.orientation.product) if f.matrix.is_square() else None
    if inv is None:
        raise SingularMatrixError("map is not an automorphism")
    return LinearMap(inv, f.orientation)
