"""Quick randomized self-check behind the ``selftest`` command."""

from __future__ import annotations

import random

from .matrix import conj_matrix, cr_mul, identity, opposite_mul, rc_mul, transpose
from .quasidet import quasidet_inverse
from .rank import minor_rank_oracle, rc_rank, verify_certificates
from .sampling import random_matrix, random_nonsingular, random_quaternion, random_rank_k
from .scalars import QUATERNIONS
from .solver import rc_inverse


def run_selftest(seed: int = 0, count: int = 20) -> list[tuple[str, bool]]:
    rng = random.Random(seed)
    results: list[tuple[str, bool]] = []

    ok = True
    for _ in range(count):
        a, b, c = (random_quaternion(rng) for _ in range(3))
        ok &= (a * b) * c == a * (b * c) and a * (b + c) == a * b + a * c
        ok &= (a * b).conj() == b.conj() * a.conj()
        ok &= not a or a * a.inverse() == a.inverse() * a == 1
    results.append(("quaternion axioms", ok))

    ok = True
    for _ in range(count):
        m, k, n = (rng.randint(1, 3) for _ in range(3))
        A = random_matrix(rng, m, k, zero_prob=0.2)
        B = random_matrix(rng, k, n, zero_prob=0.2)
        cr = cr_mul(A, B)
        ok &= transpose(rc_mul(A, B)) == cr_mul(transpose(B), transpose(A))
        ok &= cr == conj_matrix(rc_mul(conj_matrix(A), conj_matrix(B))) == opposite_mul(A, B)
    results.append(("duality transports", ok))

    ok = True
    for _ in range(count):
        n = rng.randint(1, 3)
        A = random_nonsingular(rng, n)
        Ainv = rc_inverse(A)
        I = identity(n, QUATERNIONS)
        ok &= rc_mul(A, Ainv) == I == rc_mul(Ainv, A)
        ok &= quasidet_inverse(A) == Ainv
    results.append(("inverse: elimination vs quasideterminants", ok))

    ok = True
    for _ in range(count):
        m, n = rng.randint(1, 3), rng.randint(1, 3)
        A = random_rank_k(rng, m, n, rng.randint(0, min(m, n)))
        rep = rc_rank(A)
        ok &= rep.rank == minor_rank_oracle(A) and verify_certificates(A, rep)
    results.append(("rank: elimination vs minor search", ok))
    return results
