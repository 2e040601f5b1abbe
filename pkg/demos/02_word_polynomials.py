"""
Word polynomials
================

P_w(x, y) = sum over k < n of x^k y^(a_0 + ... + a_k).  Substituting
X -> [[x, z], [0, 1]] and A -> [[y, 0], [0, 1]] turns w into an affine map
whose translation part is P_w(x, y) z.
"""
from udwords import BivarPoly, affine_image, parse_word, poly_compose_identity, word_polynomial
from udwords.certificates import verify_factorization

for text in ("X^2AX", "XAXAX", "XAX^2AX"):
    print(f"P[{text}] =", word_polynomial(parse_word(text)))

# 2x2 matrices agree with the polynomial
w = parse_word("X^2AX")
print("matrix product at (2, 3, 1):", affine_image(w, 2, 3, 1))
print("x^n y^m, P_w(2, 3):", 2**w.n * 3**w.a_count, word_polynomial(w)(2, 3))

# composition turns into a substitution times a product
u, v = parse_word("X^2"), parse_word("XAX")
lhs, rhs = poly_compose_identity(u, v)
print("P[u o v] =", lhs, "| P_u(x^n y^m, y) P_v =", rhs)

# XAXAX composed with itself has a visible factorization after squaring
P = BivarPoly.parse("1 + x^2*y^2 + x^4*y^4")
print(verify_factorization(P, [BivarPoly.parse("1 + x*y + x^2*y^2"), BivarPoly.parse("1 - x*y + x^2*y^2")]))
