import random
from math import gcd

import pytest
from hypothesis import given, settings, strategies as st

from udwords import make_group, parse_word
from udwords.gp import GpElement, primitive_root

from conftest import words


def affine(G, g):
    # oracle: the element as a 2x2 matrix over F_p
    return ((pow(G.t, g.beta, G.p), g.gamma), (0, 1))


def matmul(a, b, p):
    return tuple(
        tuple(sum(a[r][k] * b[k][c] for k in range(2)) % p for c in range(2)) for r in range(2)
    )


def test_make_group_examples():
    G7 = make_group(7)
    assert (G7.q, primitive_root(7), G7.t) == (3, 3, 2)
    G11 = make_group(11)
    assert (G11.q, primitive_root(11), G11.t) == (5, 2, 4)
    assert sorted(G11.powers) == sorted({x * x % 11 for x in range(1, 11)})
    G3 = make_group(3)
    assert (G3.q, G3.t, G3.order) == (1, 1, 3)
    with pytest.raises(ValueError):
        make_group(9)


@pytest.mark.parametrize("p", [7, 11, 23, 31, 101])
def test_group_invariants(p):
    G = make_group(p)
    assert pow(G.t, G.q, p) == 1
    assert all(pow(G.t, k, p) != 1 for k in range(1, G.q))
    assert set(G.powers) == {x * x % p for x in range(1, p)}
    assert G.order == p * (p - 1) // 2 == len(list(G.elements()))


def test_arithmetic_examples():
    G = make_group(11)
    assert G.mul(G.S, G.T) == GpElement(1, 1)
    assert G.inv(G.S) == G.pow(G.S, G.p - 1)
    assert G.pow(G.T, G.q) == G.identity


def test_matrix_oracle():
    G = make_group(23)
    rng = random.Random(1)
    elems = list(G.elements())
    for _ in range(200):
        a, b, c = rng.sample(elems, 3)
        prod = G.mul(G.mul(a, b), c)
        assert prod == G.mul(a, G.mul(b, c))
        assert affine(G, prod) == matmul(matmul(affine(G, a), affine(G, b), G.p), affine(G, c), G.p)
        assert G.mul(a, G.inv(a)) == G.identity


def test_mth_root_examples():
    G = make_group(7)
    g = GpElement(3, 2)
    assert G.mth_root(g, 1) == g
    assert G.mth_root(G.S, 2) == G.pow(G.S, 11)
    with pytest.raises(ValueError):
        G.mth_root(G.S, 3)


def test_eval_word_examples():
    G7 = make_group(7)
    assert G7.eval_word(parse_word("X"), GpElement(4, 1), G7.T) == GpElement(4, 1)
    # S T S: z -> t(z + 1) + 1 = t z + t + 1
    assert G7.eval_word(parse_word("XAX"), G7.S, G7.T) == GpElement(G7.t + 1, 1)
    G11 = make_group(11)
    # t = 4 and 9 = t^3, so a = T^3 makes P_w(1, t^3) = 1 + 1 + 9 = 0 mod 11
    w = parse_word("X^2AX")
    a = G11.pow(G11.T, 3)
    assert G11.eval_word(w, G11.S, a) == a
    assert G11.normal_form_rhs(w, 1, 0, 3) == a


def test_normal_form_trivial_words():
    G = make_group(11)
    assert G.normal_form_rhs(parse_word("X"), 3, 2, 4) == GpElement(3, 2)
    assert G.normal_form_rhs(parse_word("A"), 3, 2, 4) == GpElement(0, 4)


def test_counterexample_x2ax_g11():
    G = make_group(11)
    w = parse_word("X^2AX")
    data = G.counterexample_data(w)
    assert (data["x"], data["y"], data["delta"], data["alpha"]) == (1, 3, 0, 3)
    a, b = G.construct_counterexample(w)
    assert a == GpElement(0, 3) and b == GpElement(1, 3)
    assert G.verify_no_solution(w, a, b)
    g1, g2, bp = G.find_collision(w, a)
    assert g1 != g2 and G.eval_word(w, g1, a) == G.eval_word(w, g2, a) == bp


def test_counterexample_none():
    G = make_group(11)
    assert G.construct_counterexample(parse_word("XAXAX")) is None
    assert G.construct_counterexample(parse_word("X")) is None


def test_counterexample_gcd_guard():
    with pytest.raises(ValueError):
        make_group(7).construct_counterexample(parse_word("X^2AX"))


def test_verify_no_solution_solvable_cases():
    G = make_group(7)
    assert not G.verify_no_solution(parse_word("X"), G.T, G.S)
    assert not G.verify_no_solution(parse_word("XAX"), G.identity, G.pow(G.S, 2))


def test_find_collision_bijections():
    assert make_group(11).find_collision(parse_word("X"), GpElement(0, 2)) is None
    G7 = make_group(7)
    assert G7.find_collision(parse_word("X^2"), GpElement(5, 1)) is None


@pytest.mark.parametrize("p", [7, 11, 23])
def test_normal_form_random(p):
    G = make_group(p)
    rng = random.Random(p)
    for _ in range(200):
        n_letters = rng.randint(1, 10)
        w = parse_word("".join(rng.choice("XA") for _ in range(n_letters)))
        gamma, beta, alpha = rng.randrange(p), rng.randrange(G.q), rng.randrange(G.q)
        x = G.element(gamma, beta)
        assert G.eval_word(w, x, G.element(0, alpha)) == G.normal_form_rhs(w, gamma, beta, alpha)


@given(words(max_len=6, min_x=1), st.sampled_from([11, 23, 47, 59]))
@settings(max_examples=40, deadline=None)
def test_counterexample_soundness(w, p):
    G = make_group(p)
    if gcd(w.n, G.q) != 1:
        return
    found = G.construct_counterexample(w)
    if found is not None:
        assert G.verify_no_solution(w, *found)
