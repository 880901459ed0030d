"""One 2x2 matrix, two products, two answers.

The matrix [[1, b], [c, c b]] with b = 1+k, c = j has its second row equal
to j times the first, so it is singular under the row-by-column product.
Under the column-by-row product it is invertible.

Run: python demos/02_rc_vs_cr_witness.py
"""

from skewlin import cr_inverse, cr_mul, cr_quasidet, cr_rank, rc_inverse, rc_quasidet, rc_rank, witness_matrix
from skewlin.witness import demo_paper_example, render_demo

W = witness_matrix()
print(W, end="\n\n")

print("RC rank", rc_rank(W).rank, "  CR rank", cr_rank(W).rank)
print("RC quasideterminant at (1,1):", rc_quasidet(W, 1, 1))
print("CR quasideterminant at (1,1):", cr_quasidet(W, 1, 1))
print("RC inverse:", rc_inverse(W))

V = cr_inverse(W)
print("CR inverse:\n" + str(V))
print("V (cr) W:\n" + str(cr_mul(V, W)))

print("\nFull verified report:\n")
print(render_demo(demo_paper_example()))
