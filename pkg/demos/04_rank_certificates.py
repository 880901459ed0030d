"""Rank with a certificate you can check by hand.

The report names a nonsingular major minor and writes every other row as a
left combination of the major rows (and every other column as a right
combination of the major columns).

Run: python demos/04_rank_certificates.py
"""

import random

from skewlin import left_annihilator, minor_rank_oracle, rc_mul, rc_rank, right_annihilator, verify_certificates
from skewlin.sampling import random_rank_k

rng = random.Random(4)
A = random_rank_k(rng, 4, 3, 2, max_num=2, max_den=1)
print(A, end="\n\n")

rep = rc_rank(A)
print("rank", rep.rank, "(exhaustive minor search says", minor_rank_oracle(A), ")")
print("major minor rows", rep.major_rows, "cols", rep.major_cols)
for p, coeffs in sorted(rep.row_dependencies.items()):
    print(f"row {p} = " + " + ".join(f"({c}) row {s}" for c, s in zip(coeffs, rep.major_rows)))
for r, coeffs in sorted(rep.col_dependencies.items()):
    print(f"col {r} = " + " + ".join(f"col {t} ({c})" for c, t in zip(coeffs, rep.major_cols)))
print("certificates re-multiply exactly:", verify_certificates(A, rep))

lam, mu = left_annihilator(A, rep), right_annihilator(A, rep)
print("lambda A = 0:", rc_mul(lam, A).is_zero(), "  A mu = 0:", rc_mul(A, mu).is_zero())
