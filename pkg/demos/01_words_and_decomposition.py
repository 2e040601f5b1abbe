"""
Words, composition and decomposition
====================================

A word in X and A is stored as its exponent vector: the powers of A
between consecutive X's.  Totally decomposable words are built from X by
the maps L (prepend A), R (append A) and Pi(m,k): w -> (w A^k)^m w.
"""
from udwords import compose, decompose, parse_word, render_word
from udwords.words import L, Pi, R, X, enumerate_words, replay

w = parse_word("XAX^2AXAXAX^2AX")
print(render_word(w), "exponents", w.exponents, "n =", w.n)

# composition substitutes the second word for every X of the first
print(render_word(compose(parse_word("X^2"), parse_word("XAX"))))

# the search returns the maps innermost first; replaying them rebuilds w
witness = decompose(w)
print("witness:", " ".join(map(str, witness)))
step = X
for phi in witness:
    step = replay([phi], step)
    print(f"  {phi!s:8} ->", render_word(step))
assert replay(witness) == w

# X^2AX is the smallest canonical word that is not decomposable
print("X^2AX:", decompose(parse_word("X^2AX")))

# L and R only add outer A's, so the survey looks at words with X at both ends
print(render_word(replay([Pi(1, 1), L, R])))

counts = {}
for v in enumerate_words(10, canonical=True):
    counts.setdefault(len(v), [0, 0])
    counts[len(v)][decompose(v) is not None] += 1
for length, (no, yes) in sorted(counts.items()):
    print(f"length {length:2d}: {yes:3d} decomposable, {no:3d} not")
