"""
Certificates
============

Some families of words are shown not radical by an exact argument about
P_w(x^2, y^2): a pole or zero that is not repeated, or a discriminant that
is not a square.  Each certificate recomputes its polynomials from the word.
"""
import json

from udwords import certify_three_apart, certify_X2AXnX, certify_XAXnAX, certify_XnAXm

rep = certify_XnAXm(1, 3)
print(rep.word, rep.verdict.value, "gcd", rep.evidence["gcd"])
print(certify_XnAXm(2, 2).verdict.value)

rep = certify_three_apart(0, 1)
print(rep.word, rep.verdict.value)
print("  D(y) =", rep.evidence["discriminant"])
print("  =", rep.evidence["discriminant_factored"])

for n in range(3, 9):
    rep = certify_XAXnAX(n)
    print(f"{rep.word:12} D(1) = {rep.evidence['D_at_1']:3d} {rep.verdict.value}")

rep = certify_X2AXnX(3)
print(json.dumps(rep.to_dict(), indent=1)[:600])
