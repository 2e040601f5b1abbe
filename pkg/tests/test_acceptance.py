"""Acceptance criteria, one test each.

Run with ``pytest tests/test_acceptance.py`` (a PASS/FAIL line per criterion
is printed in the terminal summary) or directly as a script.
"""
import itertools
import random
import time
from contextlib import contextmanager
from fractions import Fraction as F
from math import gcd

from udwords import (
    BivarPoly,
    NCSeries,
    UnipotentMatrix,
    affine_image,
    certify_three_apart,
    certify_XAXnAX,
    certify_XnAXm,
    decompose,
    evaluate,
    make_group,
    parse_word,
    poly_compose_identity,
    prime_profile,
    riccati_forms,
    series_solve_product,
    solve_decomposable,
    ut_solve_product,
    verify_factorization,
    word_polynomial,
)
from udwords.backends import SeriesBackend, UTBackend
from udwords.modp import primes_between
from udwords.survey import UNRESOLVED, survey
from udwords.words import Word, enumerate_words, replay

RESULTS: dict[int, tuple[bool, str]] = {}


@contextmanager
def criterion(num, title, budget=None):
    """Record PASS/FAIL for one criterion; an overrun of ``budget`` seconds fails it."""
    notes = []
    start = time.perf_counter()
    try:
        yield notes
    except Exception as exc:
        first = str(exc).splitlines()[0] if str(exc) else type(exc).__name__
        RESULTS[num] = (False, "; ".join([title, *notes, first]))
        raise
    elapsed = time.perf_counter() - start
    detail = f"{title} ({elapsed:.2f}s)" + ("; " + "; ".join(notes) if notes else "")
    if budget is not None and elapsed >= budget:
        RESULTS[num] = (False, detail + f"; over the {budget}s budget")
        raise AssertionError(f"took {elapsed:.1f}s, budget {budget}s")
    RESULTS[num] = (True, detail)


def summary_lines():
    out = []
    for num in sorted(RESULTS):
        ok, detail = RESULTS[num]
        out.append(f"criterion {num:2d}: {'PASS' if ok else 'FAIL'}  {detail}")
    return out


def test_01_decomposability():
    with criterion(1, "decomposability fixtures", budget=1) as notes:
        w = parse_word("XAX^2AXAXAX^2AX")
        witness = decompose(w)
        assert witness is not None and replay(witness) == w
        notes.append("witness " + " ".join(map(str, witness)))
        assert decompose(parse_word("X^2AX")) is None
        for n in range(1, 7):
            v = Word((0,) * n + (1,) + (0,) * n)
            found = decompose(v)
            assert found is not None and replay(found) == v


def test_02_word_polynomials():
    with criterion(2, "word polynomial fixtures"):
        assert word_polynomial(parse_word("X^2AX")) == BivarPoly.parse("1 + x + x^2*y")
        assert word_polynomial(parse_word("XAXAX")) == BivarPoly.parse("1 + x*y + x^2*y^2")
        assert verify_factorization(
            BivarPoly.parse("1 + x^2*y^2 + x^4*y^4"),
            [BivarPoly.parse("1 + x*y + x^2*y^2"), BivarPoly.parse("1 - x*y + x^2*y^2")],
        )


def test_03_composition_identity():
    with criterion(3, "composition identity over all X-terminated pairs", budget=30) as notes:
        ws = [w for w in enumerate_words(6) if w.ends_with_x()]
        for u, w in itertools.product(ws, repeat=2):
            lhs, rhs = poly_compose_identity(u, w)
            assert lhs == rhs, (u, w)
        notes.append(f"{len(ws) ** 2} pairs")


def test_04_affine_oracle():
    with criterion(4, "affine matrix oracle, 1000 random cases"):
        rng = random.Random(2024)
        for _ in range(1000):
            w = Word.from_letters("".join(rng.choice("XA") for _ in range(rng.randint(0, 8))))
            x, y, z = (rng.randint(-9, 9) for _ in range(3))
            expect = (x**w.n * y**w.a_count, word_polynomial(w)(x, y) * z)
            assert affine_image(w, x, y, z) == expect, (w, x, y, z)


def test_05_modp_scans():
    with criterion(5, "mod-p scans on [5, 1000]", budget=60) as notes:
        exc_x2ax = prime_profile(parse_word("X^2AX"), 5, 1000).exceptional
        exc_xaxax = prime_profile(parse_word("XAXAX"), 5, 1000).exceptional
        expect = [p for p in primes_between(5, 1000) if p % 3 != 1]
        notes.append(f"X^2AX exceptional {exc_x2ax}")
        notes.append(f"XAXAX congruence pattern {'matches' if exc_xaxax == expect else 'differs'}")
        assert exc_xaxax == expect
        assert exc_x2ax == [], f"X^2AX exceptional primes {exc_x2ax}"


def test_06_counterexample_pipeline():
    with criterion(6, "counterexample pipeline for X^2AX in G_11", budget=1) as notes:
        G = make_group(11)
        w = parse_word("X^2AX")
        a, b = G.construct_counterexample(w)
        assert len(list(G.elements())) == 55
        assert G.verify_no_solution(w, a, b)
        g1, g2, bp = G.find_collision(w, a)
        assert g1 != g2 and G.eval_word(w, g1, a) == G.eval_word(w, g2, a) == bp
        notes.append(f"a={tuple(a)} b={tuple(b)} collision {tuple(g1)},{tuple(g2)}")


def test_07_normal_form_identity():
    with criterion(7, "normal form identity, 200 tuples per group"):
        rng = random.Random(7)
        for p in (7, 11, 23):
            G = make_group(p)
            for _ in range(200):
                w = Word.from_letters("".join(rng.choice("XA") for _ in range(rng.randint(1, 12))))
                gamma, beta, alpha = rng.randrange(p), rng.randrange(G.q), rng.randrange(G.q)
                lhs = G.eval_word(w, G.element(gamma, beta), G.element(0, alpha))
                assert lhs == G.normal_form_rhs(w, gamma, beta, alpha)


def test_08_unique_roots():
    with criterion(8, "unique roots in G_31", budget=10) as notes:
        G = make_group(31)
        assert G.order == 465
        elems = list(G.elements())
        ms = [m for m in range(1, 21) if gcd(m, 465) == 1]
        for m in ms:
            # full scan: g -> g^m hits every element exactly once
            image = {}
            for h in elems:
                image.setdefault(G.pow(h, m), []).append(h)
            assert len(image) == len(elems)
            for g in elems:
                r = G.mth_root(g, m)
                assert G.pow(r, m) == g and image[g] == [r]
        notes.append(f"m in {ms}")


def test_09_unipotent_solver():
    with criterion(9, "unipotent product solver and both closed forms"):
        rng = random.Random(9)
        for _ in range(100):
            n, m = rng.randint(1, 4), rng.randint(1, 3)
            A_list = [UnipotentMatrix.random(n, rng) for _ in range(m)]
            B = UnipotentMatrix.random(n, rng)
            X = ut_solve_product(A_list, B)
            prod = UnipotentMatrix.identity(n)
            for Ai in A_list:
                prod = prod * Ai * X
            assert prod == B
        first, second = riccati_forms()
        for n in (3, 4, 5):
            U = UTBackend(n)
            for _ in range(3):
                A, B = U.random_element(rng), U.random_element(rng)
                X = ut_solve_product([UnipotentMatrix.identity(n), A], B)
                assert evaluate(first, U, A, B) == evaluate(second, U, A, B) == X


def test_10_series_solver():
    with criterion(10, "series solver against the radical formula") as notes:
        formula = solve_decomposable(decompose(parse_word("XAX")))
        for d in range(1, 7):
            A, B = NCSeries.generator("a", d), NCSeries.generator("b", d)
            X = series_solve_product([NCSeries.one(d), A], B, d)
            assert X == evaluate(formula, SeriesBackend(d), A, B)
            assert X * A * X == B
        A, B = NCSeries.generator("a", 2), NCSeries.generator("b", 2)
        X = series_solve_product([NCSeries.one(2), A], B, 2)
        # independent back-substitution: X = 1 + (b - a)/2 + x2 with x2 from the degree-2 part of XAX
        x1 = (B - A).scale(F(1, 2))
        one = NCSeries.one(2)
        defect = (one + x1) * A * (one + x1) - B
        x2 = NCSeries({w: -c / 2 for w, c in defect.coeffs.items() if len(w) == 2}, 2)
        assert X == one + x1 + x2
        got = (X["aa"], X["ab"], X["ba"], X["bb"])
        assert got == (F(3, 8), F(-1, 8), F(-1, 8), F(-1, 8))
        notes.append("degree-2 coefficients " + ", ".join(map(str, got)))


def test_11_certificates():
    with criterion(11, "family certificates", budget=10) as notes:
        reports = [certify_XnAXm(m, n) for m in range(1, 5) for n in range(1, 5) if m != n]
        reports += [certify_three_apart(m, n) for m in range(0, 6) for n in range(1, 6)]
        reports += [certify_XAXnAX(n) for n in range(3, 9)]
        for r in reports:
            assert r.certified, r.word
            assert r.evidence
        for r in reports:
            if r.family.value == "XAXnAX":
                n = r.params[0]
                assert r.evidence["D_at_1"] == n * n - 4
        notes.append(f"{len(reports)} reports certified")


def test_12_survey():
    with criterion(12, "survey to length 10, cutoff 13", budget=600) as notes:
        rows = list(survey(10, 5, 499, cutoff=13))
        again = list(survey(10, 5, 499, cutoff=13))
        assert [r.to_json() for r in rows] == [r.to_json() for r in again]
        unresolved = [r for r in rows if r.verdict == UNRESOLVED]
        notes.append(f"{len(rows)} words, {len(unresolved)} unresolved")
        if unresolved:
            shown = ", ".join(f"{r.word} {r.exceptional_primes}" for r in unresolved[:6])
            notes.append(f"e.g. {shown}")
        assert [r.word for r in unresolved] == [], f"{len(unresolved)} unresolved rows"


if __name__ == "__main__":
    import sys

    for name, fn in sorted(globals().items()):
        if name.startswith("test_") and callable(fn):
            try:
                fn()
            except Exception:
                pass
    print("\n".join(summary_lines()))
    sys.exit(0 if all(ok for ok, _ in RESULTS.values()) else 1)
