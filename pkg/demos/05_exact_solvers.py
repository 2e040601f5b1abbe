"""
Exact solvers
=============

Unipotent rational matrices and truncated noncommutative power series both
have unique roots.  Equations (A_1 X)(A_2 X)...(A_m X) = B are solved one
column (or one degree) at a time.
"""
import random
from fractions import Fraction

from udwords import NCSeries, UnipotentMatrix, series_solve_product, ut_solve_product

rng = random.Random(7)
A = UnipotentMatrix.random(3, rng)
B = UnipotentMatrix.random(3, rng)
I = UnipotentMatrix.identity(3)

# XAX = B is (I X)(A X) = B
X = ut_solve_product([I, A], B)
print("X =", X.to_strings())
print("XAX == B:", X * A * X == B)

# with every A_i = I the solver computes an m-th root
for m in (2, 3, 5):
    print(m, ut_solve_product([I] * m, B) == B.power(Fraction(1, m)))

# series with A = 1 + a, B = 1 + b; the degree-2 part is checked by hand
d = 3
a, b = NCSeries.generator("a", d), NCSeries.generator("b", d)
Xs = series_solve_product([NCSeries.one(d), a], b, d)
for word, c in Xs.pairs():
    print(f"  {word or '1':4} {c}")
print("XAX == B:", Xs * a * Xs == b)
