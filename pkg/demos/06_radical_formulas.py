"""
Radical formulas
================

A decomposition witness gives an explicit solution in radicals.  The
formula is evaluated in each backend and substituted back into the word.
"""
import math
import random

from udwords import decompose, evaluate, parse_word, riccati_forms, solve_decomposable, verify_solution
from udwords.backends import RealBackend, SeriesBackend, UTBackend
from udwords.radical import parse, render

for text in ("XAX", "XAXAX", "X^3", "XAX^2AXAXAX^2AX"):
    w = parse_word(text)
    E = solve_decomposable(decompose(w))
    print(f"{text}:\n  X = {render(E)}")
    print("  UT_4:", verify_solution(w, E, UTBackend(4)), " series:4:", verify_solution(w, E, SeriesBackend(4)))

# over positive reals XAX = B is x^2 a = b
E = solve_decomposable(decompose(parse_word("XAX")))
print(evaluate(E, RealBackend(), 2.0, 18.0), math.sqrt(18.0 / 2.0))

# the two closed forms for XAX = B agree exactly
first, second = riccati_forms()
print(render(second))
U = UTBackend(5)
rng = random.Random(1)
a, b = U.random_element(rng), U.random_element(rng)
print("forms agree in UT_5:", evaluate(first, U, a, b) == evaluate(second, U, a, b))

# a guess for X^2AX = B fails on a random instance
guess = parse("A^(-1/3)(A^(1/3)BA^(1/3))^(1/3)A^(-1/3)")
print("guess solves X^2AX:", verify_solution(parse_word("X^2AX"), guess, UTBackend(3), trials=3))
