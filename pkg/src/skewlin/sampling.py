"""Seeded random scalars and matrices for property checks.

Coefficients are ``p/q`` with ``|p| <= max_num`` and ``1 <= q <= max_den``.
Every generator takes an explicit :class:`random.Random`, so runs are
reproducible from a seed.
"""

from __future__ import annotations

import random
from fractions import Fraction

from .elimination import gauss_jordan_inverse
from .matrix import Matrix, conj_matrix, cr_mul, rc_mul
from .scalars import QUATERNIONS, DivisionRing, Quaternion, Scalar

__all__ = [
    "random_rational",
    "random_quaternion",
    "random_scalar",
    "random_nonzero",
    "random_matrix",
    "random_nonsingular",
    "random_rank_k",
]


def random_rational(rng: random.Random, max_num: int = 9, max_den: int = 9) -> Fraction:
    return Fraction(rng.randint(-max_num, max_num), rng.randint(1, max_den))


def random_quaternion(rng: random.Random, max_num: int = 9, max_den: int = 9) -> Quaternion:
    return Quaternion(*(random_rational(rng, max_num, max_den) for _ in range(4)))


def random_scalar(rng: random.Random, ring: DivisionRing = QUATERNIONS, max_num: int = 9, max_den: int = 9) -> Scalar:
    if ring is QUATERNIONS:
        return random_quaternion(rng, max_num, max_den)
    return random_rational(rng, max_num, max_den)


def random_nonzero(rng: random.Random, ring: DivisionRing = QUATERNIONS, max_num: int = 9, max_den: int = 9) -> Scalar:
    while True:
        x = random_scalar(rng, ring, max_num, max_den)
        if x:
            return x


def random_matrix(
    rng: random.Random,
    rows: int,
    cols: int,
    ring: DivisionRing = QUATERNIONS,
    *,
    zero_prob: float = 0.0,
    max_num: int = 9,
    max_den: int = 9,
) -> Matrix:
    """Independent entries; ``zero_prob`` sprinkles exact zeros to exercise pivoting."""
    def entry():
        if zero_prob and rng.random() < zero_prob:
            return ring.zero
        return random_scalar(rng, ring, max_num, max_den)

    return Matrix([[entry() for _ in range(cols)] for _ in range(rows)], ring, rows=rows, cols=cols)


def random_nonsingular(
    rng: random.Random, n: int, ring: DivisionRing = QUATERNIONS, product: str = "rc", **kw
) -> Matrix:
    """Rejection-sample until invertible under ``product``."""
    while True:
        A = random_matrix(rng, n, n, ring, **kw)
        probe = A if product == "rc" else conj_matrix(A)
        if gauss_jordan_inverse(probe) is not None:
            return A


def random_rank_k(
    rng: random.Random,
    rows: int,
    cols: int,
    k: int,
    ring: DivisionRing = QUATERNIONS,
    product: str = "rc",
    **kw,
) -> Matrix:
    """``L * R`` with ``L`` of shape rows x k and ``R`` of shape k x cols.

    The rank under ``product`` is at most ``k`` and generically equal to it.
    """
    if k == 0:
        return Matrix([[ring.zero] * cols for _ in range(rows)], ring, rows=rows, cols=cols)
    L = random_matrix(rng, rows, k, ring, **kw)
    R = random_matrix(rng, k, cols, ring, **kw)
    return rc_mul(L, R) if product == "rc" else cr_mul(L, R)

