"""
A finite group where X^2AX = B has no solution
==============================================

G_p is the group of maps z -> t^beta z + gamma on Z/p with t of order
q = (p - 1)/2.  For q coprime to the number of X's, a zero of
P_w(x^2, y^2) mod p gives a target b that w(X, a) never reaches.
"""
from udwords import find_suitable_prime, make_group, parse_word

w = parse_word("X^2AX")
p = find_suitable_prime(w.n, 7)
G = make_group(p)
print(f"p = {p}, q = {G.q}, t = {G.t}, |G| = {G.order}")

data = G.counterexample_data(w)
print("zero of P(x^2, y^2):", (data["x"], data["y"]), "delta, alpha:", data["delta"], data["alpha"])
a, b = data["a"], data["b"]
print("a =", a, " b =", b)
print("no X with w(X, a) = b:", G.verify_no_solution(w, a, b))

# the map X -> w(X, a) misses b, so it is not injective either
g1, g2, bp = G.find_collision(w, a)
print("collision:", g1, g2, "->", bp)

# roots are unique in G_p when m is coprime to the order
g = G.element(3, 2)
r = G.mth_root(g, 2)
print("square root of", g, "is", r, "check", G.pow(r, 2) == g)

# XAXAX has no such witness at p = 11
print(make_group(11).construct_counterexample(parse_word("XAXAX")))
