"""Exact quaternion arithmetic and why order matters.

Run: python demos/01_quaternion_arithmetic.py
"""

from skewlin import format_scalar, parse_scalar

b = parse_scalar("1+k")
c = parse_scalar("j")

print("b =", b, "  c =", c)
print("b c =", b * c)
print("c b =", c * b)
print("commute?", b * c == c * b)

# inverses are two-sided, conjugation reverses products
print("b^-1 =", b.inverse(), "  check:", b * b.inverse(), b.inverse() * b)
print("conj(b c) =", (b * c).conj(), "  conj(c) conj(b) =", c.conj() * b.conj())
print("|b c|^2 =", (b * c).norm_sq(), "= |b|^2 |c|^2 =", b.norm_sq() * c.norm_sq())

# the text grammar round-trips exactly
q = parse_scalar("-1/2 + 3/4 i - 5/3k")
print("parsed:", format_scalar(q), "coefficients", [str(x) for x in q.coefficients])
