"""Exact linear algebra over noncommutative division rings.

The concrete ring is the quaternions with rational coefficients.  Matrices
multiply either row-by-column (``rc_mul``) or column-by-row (``cr_mul``);
singularity, inverses, rank and solvability all depend on that choice.
"""

from .matrix import (
    DimensionError,
    Matrix,
    conj_matrix,
    cr_mul,
    hstack,
    identity,
    opposite_mul,
    rc_mul,
    submatrix,
    transpose,
    vstack,
    zeros,
)
from .quasidet import Undefined, cr_quasidet, is_defined, quasidet_inverse, rc_quasidet
from .rank import (
    RankReport,
    cr_rank,
    first_major_minor,
    is_cr_singular,
    is_rc_singular,
    is_singular,
    left_annihilator,
    minor_rank_oracle,
    product_singularity_check,
    rank,
    rc_rank,
    right_annihilator,
    verify_certificates,
)
from .scalars import QUATERNIONS, RATIONALS, ParseError, Quaternion, format_scalar, get_ring, parse_scalar
from .solver import (
    Inconsistent,
    Parametric,
    SingularMatrixError,
    Unique,
    apply_system,
    cr_inverse,
    homogeneous_space_closure_check,
    inverse,
    rc_inverse,
    solve_general,
    solve_nonsingular,
)
from .spaces import (
    Basis,
    LinearMap,
    Orientation,
    VectorFamily,
    apply_map,
    automorphism_check,
    change_of_basis,
    compose_maps,
    coordinates,
    dimension,
    extract_basis,
    in_span,
    inverse_map,
    is_independent,
    transform_coordinates,
)
from .witness import demo_paper_example, witness_matrix

__all__ = [
    "DimensionError",
    "Matrix",
    "conj_matrix",
    "cr_mul",
    "hstack",
    "identity",
    "opposite_mul",
    "rc_mul",
    "submatrix",
    "transpose",
    "vstack",
    "zeros",
    "Undefined",
    "cr_quasidet",
    "is_defined",
    "quasidet_inverse",
    "rc_quasidet",
    "RankReport",
    "cr_rank",
    "first_major_minor",
    "is_cr_singular",
    "is_rc_singular",
    "is_singular",
    "left_annihilator",
    "minor_rank_oracle",
    "product_singularity_check",
    "rank",
    "rc_rank",
    "right_annihilator",
    "verify_certificates",
    "QUATERNIONS",
    "RATIONALS",
    "ParseError",
    "Quaternion",
    "format_scalar",
    "get_ring",
    "parse_scalar",
    "Inconsistent",
    "Parametric",
    "SingularMatrixError",
    "Unique",
    "apply_system",
    "cr_inverse",
    "homogeneous_space_closure_check",
    "inverse",
    "rc_inverse",
    "solve_general",
    "solve_nonsingular",
    "Basis",
    "LinearMap",
    "Orientation",
    "VectorFamily",
    "apply_map",
    "automorphism_check",
    "change_of_basis",
    "compose_maps",
    "coordinates",
    "dimension",
    "extract_basis",
    "in_span",
    "inverse_map",
    "is_independent",
    "transform_coordinates",
    "demo_paper_example",
    "witness_matrix",
]

__version__ = "0.1.0"
