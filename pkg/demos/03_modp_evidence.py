"""
Mod-p evidence
==============

If P_w(x^2, y^2) has a zero with x, y nonzero mod p for every large p,
the equation w(X, A) = B fails in a finite group built from p.  The scan
below looks for such zeros and lists the primes where none exists.
"""
import numpy as np

from udwords import parse_word, prime_profile, sum_of_squares_witness

for text in ("X^2AX", "XAXAX", "XAX^3AX", "X^2A^4X"):
    prof = prime_profile(parse_word(text), 5, 499)
    print(f"{text:10} exceptional primes: {prof.exceptional}")

# XAXAX only has zeros when p = 1 mod 3
prof = prime_profile(parse_word("XAXAX"), 5, 499)
ps = np.array([e.p for e in prof.entries])
ok = np.array([e.solvable for e in prof.entries])
print("solvable matches p % 3 == 1:", bool(np.all(ok == (ps % 3 == 1))))

# X^2AX: 1 + a^2 + b^2 = 0 gives the zero (a, b / a^2).  At p = 5 there is
# no pair with a, b both nonzero, and the scan agrees.
for p in (7, 11, 13, 101):
    a, b = sum_of_squares_witness(p)
    print(p, (a, b), "->", (a, b * pow(a, -2, p) % p))
try:
    sum_of_squares_witness(5)
except ValueError as exc:
    print("p = 5:", exc)

print(prime_profile(parse_word("X^2AX"), 5, 30).to_csv())
