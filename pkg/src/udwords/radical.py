"""Radical expressions in the letters A, B and their evaluation in a backend.

Expressions are trees of ``Letter``, ``Product`` and ``Power`` nodes with
exact rational exponents.  No simplification is attempted; two expressions
are compared only by evaluating them.
"""
from __future__ import annotations

import random
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Union

from .backends import GroupBackend
from .words import Morphism, Word, replay


@dataclass(frozen=True)
class Letter:
    name: str

    def __post_init__(self):
        if self.name not in ("A", "B"):
            raise ValueError(f"letters are A and B, got {self.name!r}")


@dataclass(frozen=True)
class Product:
    factors: tuple


@dataclass(frozen=True)
class Power:
    base: "RadicalExpr"
    exponent: Fraction


RadicalExpr = Union[Letter, Product, Power]

A = Letter("A")
B = Letter("B")
ONE = Product(())


def product(*factors: RadicalExpr) -> RadicalExpr:
    """Flattened product; a single factor is returned as is."""
    flat = []
    for f in factors:
        if isinstance(f, Product):
            flat.extend(f.factors)
        else:
            flat.append(f)
    return flat[0] if len(flat) == 1 else Product(tuple(flat))


def power(base: RadicalExpr, exponent) -> RadicalExpr:
    exponent = Fraction(exponent)
    if exponent == 1:
        return base
    if exponent == 0:
        return ONE
    return Power(base, exponent)


def solve_decomposable(witness: Sequence[Morphism]) -> RadicalExpr:
    """Radical formula for the solution of ``w(X, A) = B`` where ``w = replay(witness)``.

    The last-applied map is peeled first: ``pi_{m,k}`` becomes
    ``A^{-k/2} (A^{k/2} y A^{k/2})^{1/(m+1)} A^{-k/2}``, ``l`` becomes
    ``A^{-1} y`` and ``r`` becomes ``y A^{-1}``.
    """
    for phi in witness:
        if not isinstance(phi, Morphism):
            raise TypeError(f"not a morphism: {phi!r}")
    replay(witness)
    y: RadicalExpr = B
    for phi in reversed(witness):
        if phi.kind == "L":
            y = product(power(A, -1), y)
        elif phi.kind == "R":
            y = product(y, power(A, -1))
        else:
            half = Fraction(phi.k, 2)
            root = Fraction(1, phi.m + 1)
            if phi.k == 0:
                y = power(y, root)
            else:
                inner = product(power(A, half), y, power(A, half))
                y = product(power(A, -half), power(inner, root), power(A, -half))
    return y


def riccati_forms() -> tuple[RadicalExpr, RadicalExpr]:
    """The two closed forms of the solution of ``XAX = B``."""
    h = Fraction(1, 2)
    first = product(power(A, -h), power(product(power(A, h), B, power(A, h)), h), power(A, -h))
    inner = product(power(B, -h), power(A, -1), power(B, -h))
    second = product(power(B, h), power(inner, h), power(B, h))
    return first, second


def evaluate(E: RadicalExpr, backend: GroupBackend, a, b):
    if isinstance(E, Letter):
        return a if E.name == "A" else b
    if isinstance(E, Product):
        return backend.product(evaluate(f, backend, a, b) for f in E.factors)
    if isinstance(E, Power):
        return backend.rational_power(evaluate(E.base, backend, a, b), E.exponent)
    raise TypeError(f"not a radical expression: {E!r}")


def verify_solution(
    w: Word, E: RadicalExpr, backend: GroupBackend, trials: int = 10, seed: int = 0
) -> bool:
    """Check ``w(E(a, b), a) = b`` on ``trials`` random ``(a, b)`` from the backend."""
    rng = random.Random(seed)
    for _ in range(trials):
        a = backend.random_element(rng)
        b = backend.random_element(rng)
        x = evaluate(E, backend, a, b)
        if not backend.equal(backend.eval_word(w, x, a), b):
            return False
    return True


def exponents(E: RadicalExpr) -> list[Fraction]:
    if isinstance(E, Letter):
        return []
    if isinstance(E, Product):
        return [e for f in E.factors for e in exponents(f)]
    return [E.exponent] + exponents(E.base)


def _exp_text(e: Fraction) -> str:
    if e.denominator == 1 and e > 0:
        return str(e.numerator)
    return f"({e})"


def render(E: RadicalExpr) -> str:
    """Text such as ``A^(-1/2)(A^(1/2)BA^(1/2))^(1/2)A^(-1/2)``; the empty product is ``1``."""
    if isinstance(E, Letter):
        return E.name
    if isinstance(E, Product):
        return "".join(render(f) for f in E.factors) or "1"
    base = render(E.base)
    if not isinstance(E.base, Letter):
        base = f"({base})"
    return f"{base}^{_exp_text(E.exponent)}"


_EXPONENT = re.compile(r"\s*(?:(\d+)|\(\s*(-?\d+(?:\s*/\s*\d+)?)\s*\))")


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, msg: str):
        raise ValueError(f"{msg} at position {self.pos} in {self.text!r}")

    def peek(self) -> str:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expr(self) -> RadicalExpr:
        factors = []
        while self.peek() and self.peek() != ")":
            factors.append(self.factor())
        return product(*factors) if factors else ONE

    def factor(self) -> RadicalExpr:
        c = self.peek()
        if c in ("A", "B"):
            self.pos += 1
            base: RadicalExpr = Letter(c)
        elif c == "1":
            self.pos += 1
            base = ONE
        elif c == "(":
            self.pos += 1
            base = self.expr()
            if self.peek() != ")":
                self.error("expected ')'")
            self.pos += 1
        else:
            self.error(f"unexpected {c!r}")
        while self.peek() == "^":
            self.pos += 1
            base = Power(base, self.exponent())
        return base

    def exponent(self) -> Fraction:
        m = _EXPONENT.match(self.text, self.pos)
        if m is None:
            self.error("bad exponent")
        self.pos = m.end()
        return Fraction((m.group(1) or m.group(2)).replace(" ", ""))


def parse(text: str) -> RadicalExpr:
    p = _Parser(text)
    E = p.expr()
    if p.peek():
        p.error("trailing input")
    return E
