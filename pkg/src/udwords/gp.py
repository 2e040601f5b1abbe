"""The groups ``G_p = (Z/q) x| (Z/p)``, ``q = (p-1)/2``, as affine maps of Z/p.

An element ``(gamma, beta)`` is ``S^gamma T^beta``, i.e. ``z -> t^beta z + gamma``
where ``t`` has multiplicative order ``q``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd
from typing import NamedTuple, Optional

from .modp import find_nonzero_solution, is_prime, prime_factors
from .poly import word_polynomial
from .words import Word


class GpElement(NamedTuple):
    gamma: int
    beta: int


def primitive_root(p: int) -> int:
    factors = prime_factors(p - 1)
    for g in range(1, p):
        if all(pow(g, (p - 1) // f, p) != 1 for f in factors):
            return g
    raise ValueError(f"no primitive root mod {p}")


@dataclass(frozen=True)
class GpGroup:
    p: int
    t: int
    powers: tuple[int, ...] = field(repr=False)
    dlog: dict = field(repr=False, compare=False, hash=False)

    @property
    def q(self) -> int:
        return (self.p - 1) // 2

    @property
    def order(self) -> int:
        return self.p * self.q

    @property
    def identity(self) -> GpElement:
        return GpElement(0, 0)

    @property
    def S(self) -> GpElement:
        return GpElement(1 % self.p, 0)

    @property
    def T(self) -> GpElement:
        return GpElement(0, 1 % self.q)

    def element(self, gamma: int, beta: int) -> GpElement:
        return GpElement(gamma % self.p, beta % self.q)

    def elements(self):
        for gamma in range(self.p):
            for beta in range(self.q):
                yield GpElement(gamma, beta)

    def mul(self, g1: GpElement, g2: GpElement) -> GpElement:
        return GpElement(
            (g1.gamma + self.powers[g1.beta] * g2.gamma) % self.p, (g1.beta + g2.beta) % self.q
        )

    def inv(self, g: GpElement) -> GpElement:
        beta = (-g.beta) % self.q
        return GpElement((-self.powers[beta] * g.gamma) % self.p, beta)

    def pow(self, g: GpElement, e: int) -> GpElement:
        if e < 0:
            g, e = self.inv(g), -e
        out = self.identity
        while e:
            if e & 1:
                out = self.mul(out, g)
            g = self.mul(g, g)
            e >>= 1
        return out

    def matrix(self, g: GpElement) -> tuple[tuple[int, int], tuple[int, int]]:
        return ((self.powers[g.beta], g.gamma), (0, 1))

    def mth_root(self, g: GpElement, m: int) -> GpElement:
        """The unique m-th root, ``g^r`` with ``r m = 1 mod |G|``."""
        if m < 1 or gcd(m, self.order) != 1:
            raise ValueError(f"m={m} is not coprime to the group order {self.order}")
        return self.pow(g, pow(m, -1, self.order))

    def eval_word(self, w: Word, x: GpElement, a: GpElement) -> GpElement:
        out = self.identity
        for letter in w.letters():
            out = self.mul(out, x if letter == "X" else a)
        return out

    def normal_form_rhs(self, w: Word, gamma: int, beta: int, alpha: int) -> GpElement:
        """``w(S^gamma T^beta, T^alpha)`` read off from the word polynomial."""
        P = word_polynomial(w)
        s_exp = gamma * P.eval_mod(self.powers[beta % self.q], self.powers[alpha % self.q], self.p)
        return self.element(s_exp, alpha * w.a_count + beta * w.n)

    def construct_counterexample(self, w: Word) -> Optional[tuple[GpElement, GpElement]]:
        """``(a, b)`` such that ``w(X, a) = b`` has no solution in the group.

        Returns None when ``P_w(x^2, y^2)`` has no zero in ``(F_p^*)^2``.
        """
        info = self.counterexample_data(w)
        return None if info is None else (info["a"], info["b"])

    def counterexample_data(self, w: Word) -> Optional[dict]:
        if gcd(w.n, self.q) != 1:
            raise ValueError(
                f"gcd(n, q) = gcd({w.n}, {self.q}) != 1; choose p with (p-1)/2 coprime to n"
            )
        sol = find_nonzero_solution(word_polynomial(w).substitute_squares(), self.p)
        if sol is None:
            return None
        x, y = sol
        delta = self.dlog[x * x % self.p]
        alpha = self.dlog[y * y % self.p]
        a = self.element(0, alpha)
        b = self.element(1, alpha * w.a_count + delta * w.n)
        return {"x": x, "y": y, "delta": delta, "alpha": alpha, "a": a, "b": b}

    def verify_no_solution(self, w: Word, a: GpElement, b: GpElement) -> bool:
        return all(self.eval_word(w, g, a) != b for g in self.elements())

    def find_collision(
        self, w: Word, a: GpElement
    ) -> Optional[tuple[GpElement, GpElement, GpElement]]:
        seen: dict[GpElement, GpElement] = {}
        for g in self.elements():
            v = self.eval_word(w, g, a)
            if v in seen:
                return seen[v], g, v
            seen[v] = g
        return None


def make_group(p: int) -> GpGroup:
    """``G_p`` with ``t`` the square of the least primitive root mod p."""
    if p < 3 or not is_prime(p):
        raise ValueError(f"p must be an odd prime, got {p}")
    t = pow(primitive_root(p), 2, p)
    q = (p - 1) // 2
    powers = tuple(pow(t, k, p) for k in range(q))
    return GpGroup(p, t, powers, {v: k for k, v in enumerate(powers)})
