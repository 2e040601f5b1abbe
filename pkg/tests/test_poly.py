import itertools

import pytest
from hypothesis import given, strategies as st

from udwords import BivarPoly, Word, affine_image, parse_word, poly_compose_identity, word_polynomial
from udwords.certificates import verify_factorization
from udwords.poly import UnivarPoly, poly_gcd, word_from_polynomial

from conftest import words


def P(text):
    return BivarPoly.parse(text)


def naive_word_poly(w: Word) -> dict:
    # oracle: walk the letters, one term per X counted before it
    terms, k, s = {}, 0, 0
    for c in w.letters():
        if c == "A":
            s += 1
        else:
            terms[(k, s)] = terms.get((k, s), 0) + 1
            k += 1
    return terms


def test_examples():
    assert word_polynomial(parse_word("X^2AX")) == P("1 + x + x^2*y")
    assert word_polynomial(parse_word("XAXAX")) == P("1 + x*y + x^2*y^2")
    assert word_polynomial(parse_word("XAX^2AX")) == P("1 + x*y + x^2*y + x^3*y^2")


def test_factorization_example():
    lhs = P("1 + x^2*y^2 + x^4*y^4")
    assert verify_factorization(lhs, [P("1 + x*y + x^2*y^2"), P("1 - x*y + x^2*y^2")])
    assert not verify_factorization(lhs, [P("1 + x*y + x^2*y^2")])


def test_compose_identity_example():
    lhs, rhs = poly_compose_identity(parse_word("X^2"), parse_word("XAX"))
    assert lhs == rhs == P("1 + x*y + x^2*y + x^3*y^2")
    assert rhs == P("1 + x^2*y") * P("1 + x*y")


def test_compose_identity_degree():
    w = parse_word("XAXAX")
    lhs, rhs = poly_compose_identity(w, w)
    assert lhs == rhs and lhs.x_degree() == 8


def test_compose_identity_needs_terminal_x():
    with pytest.raises(ValueError):
        poly_compose_identity(parse_word("XA"), parse_word("X"))


def test_affine_example():
    assert affine_image(parse_word("X^2AX"), 2, 3, 1) == (24, 15)


def test_substitute_squares():
    assert word_polynomial(parse_word("X^2AX")).substitute_squares() == P("1 + x^2 + x^4*y^2")


def test_eval_mod_matches_integer_eval():
    f = P("1 + x*y + x^2*y^2")
    for x, y in itertools.product(range(-4, 5), repeat=2):
        assert f.eval_mod(x, y, 7) == f(x, y) % 7


def test_parse_str_roundtrip():
    f = P("1 - 3*x*y^2 + x^4")
    assert P(str(f)) == f
    assert str(P("1 + x*y + x^2*y^2")) == "1 + x*y + x^2*y^2"


def test_gcd():
    x = UnivarPoly.monomial(1, var="x")
    f = x**6 - 1
    g = x**4 - 1
    assert poly_gcd(f, g) == x**2 - 1


@given(words(max_len=10))
def test_word_polynomial_matches_walk(w):
    assert word_polynomial(w).terms == naive_word_poly(w)


@given(words(max_len=10, min_x=1))
def test_recurrences(w):
    # P_{wX} = P_w + x^n y^m and P_{Aw} = y P_w
    n, m = w.n, w.a_count
    assert word_polynomial(w + Word((0, 0))) == word_polynomial(w) + BivarPoly.monomial(n, m)
    assert word_polynomial(Word((1,)) + w) == word_polynomial(w) * BivarPoly.monomial(0, 1)


@given(words(max_len=10, canonical=True))
def test_reconstruction(w):
    assert word_from_polynomial(word_polynomial(w)) == w


@given(words(max_len=6, min_x=1), words(max_len=6, min_x=1))
def test_compose_identity_property(u, w):
    u = u + Word((0, 0)) if not u.ends_with_x() else u
    w = w + Word((0, 0)) if not w.ends_with_x() else w
    lhs, rhs = poly_compose_identity(u, w)
    assert lhs == rhs


@given(words(max_len=8), st.integers(-9, 9), st.integers(-9, 9), st.integers(-9, 9))
def test_affine_property(w, x, y, z):
    assert affine_image(w, x, y, z) == (x**w.n * y**w.a_count, word_polynomial(w)(x, y) * z)
