"""Exact integer polynomials and the word polynomial.

``BivarPoly`` is a sparse map ``(i, j) -> c`` for the monomial
``c x^i y^j``; ``UnivarPoly`` is a dense coefficient list, lowest degree
first.  Coefficients are Python ints throughout.
"""
from __future__ import annotations

import re
from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Mapping, Sequence

from .words import Word, compose


def _monomial_text(coeff: int, powers: Sequence[tuple[str, int]]) -> str:
    factors = [v if e == 1 else f"{v}^{e}" for v, e in powers if e]
    if not factors:
        return str(abs(coeff))
    body = "*".join(factors)
    return body if abs(coeff) == 1 else f"{abs(coeff)}*{body}"


def _join_terms(terms: Iterable[tuple[int, str]]) -> str:
    out = ""
    for coeff, text in terms:
        if not out:
            out = text if coeff > 0 else f"-{text}"
        else:
            out += (" + " if coeff > 0 else " - ") + text
    return out or "0"


class BivarPoly:
    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[tuple[int, int], int] | None = None):
        clean = {}
        for (i, j), c in (terms or {}).items():
            if i < 0 or j < 0:
                raise ValueError(f"negative exponent in term {(i, j)}")
            if c:
                clean[(int(i), int(j))] = int(c)
        self.terms = clean

    @classmethod
    def constant(cls, c: int) -> "BivarPoly":
        return cls({(0, 0): c})

    @classmethod
    def monomial(cls, i: int, j: int, c: int = 1) -> "BivarPoly":
        return cls({(i, j): c})

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = BivarPoly.constant(other)
        if not isinstance(other, BivarPoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def __add__(self, other) -> "BivarPoly":
        if isinstance(other, int):
            other = BivarPoly.constant(other)
        out = dict(self.terms)
        for key, c in other.terms.items():
            out[key] = out.get(key, 0) + c
        return BivarPoly(out)

    __radd__ = __add__

    def __neg__(self) -> "BivarPoly":
        return BivarPoly({k: -c for k, c in self.terms.items()})

    def __sub__(self, other) -> "BivarPoly":
        if isinstance(other, int):
            other = BivarPoly.constant(other)
        return self + (-other)

    def __mul__(self, other) -> "BivarPoly":
        if isinstance(other, int):
            return BivarPoly({k: c * other for k, c in self.terms.items()})
        out: dict[tuple[int, int], int] = {}
        for (i1, j1), c1 in self.terms.items():
            for (i2, j2), c2 in other.terms.items():
                key = (i1 + i2, j1 + j2)
                out[key] = out.get(key, 0) + c1 * c2
        return BivarPoly(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "BivarPoly":
        out = BivarPoly.constant(1)
        for _ in range(e):
            out = out * self
        return out

    def x_degree(self) -> int:
        return max((i for i, _ in self.terms), default=-1)

    def y_degree(self) -> int:
        return max((j for _, j in self.terms), default=-1)

    def substitute_monomial(self, n: int, m: int) -> "BivarPoly":
        """``P(x^n y^m, y)``."""
        return BivarPoly({(i * n, j + i * m): c for (i, j), c in self.terms.items()})

    def substitute_squares(self) -> "BivarPoly":
        """``P(x^2, y^2)``."""
        return BivarPoly({(2 * i, 2 * j): c for (i, j), c in self.terms.items()})

    def __call__(self, x, y):
        return sum(c * x**i * y**j for (i, j), c in self.terms.items())

    def eval_mod(self, x: int, y: int, p: int) -> int:
        return sum(c * pow(x, i, p) * pow(y, j, p) for (i, j), c in self.terms.items()) % p

    def coefficient_in_x(self, i: int) -> "UnivarPoly":
        """The coefficient of ``x^i`` as a polynomial in y."""
        coeffs = [0] * (self.y_degree() + 1)
        for (ii, j), c in self.terms.items():
            if ii == i:
                coeffs[j] += c
        return UnivarPoly(coeffs, "y")

    def coefficient_in_y(self, j: int) -> "UnivarPoly":
        coeffs = [0] * (self.x_degree() + 1)
        for (i, jj), c in self.terms.items():
            if jj == j:
                coeffs[i] += c
        return UnivarPoly(coeffs, "x")

    def sorted_terms(self) -> list[tuple[tuple[int, int], int]]:
        # graded lex, x before y
        return sorted(self.terms.items(), key=lambda kv: (kv[0][0] + kv[0][1], -kv[0][0]))

    def __str__(self) -> str:
        return _join_terms(
            (c, _monomial_text(c, [("x", i), ("y", j)])) for (i, j), c in self.sorted_terms()
        )

    def __repr__(self) -> str:
        return f"BivarPoly({str(self)!r})"

    @classmethod
    def parse(cls, text: str) -> "BivarPoly":
        """Inverse of ``str``: accepts sums of terms like ``-3*x^2*y``."""
        s = text.replace(" ", "")
        if s in ("", "0"):
            return cls()
        if s[0] not in "+-":
            s = "+" + s
        out: dict[tuple[int, int], int] = {}
        for m in re.finditer(r"([+-])([^+-]+)", s):
            sign = -1 if m.group(1) == "-" else 1
            coeff, i, j = 1, 0, 0
            for factor in m.group(2).split("*"):
                fm = re.fullmatch(r"(\d+)|([xy])(?:\^(\d+))?", factor)
                if fm is None:
                    raise ValueError(f"cannot parse term {m.group(0)!r} in {text!r}")
                if fm.group(1):
                    coeff *= int(fm.group(1))
                elif fm.group(2) == "x":
                    i += int(fm.group(3) or 1)
                else:
                    j += int(fm.group(3) or 1)
            out[(i, j)] = out.get((i, j), 0) + sign * coeff
        if "".join(m.group(0) for m in re.finditer(r"([+-])([^+-]+)", s)) != s:
            raise ValueError(f"cannot parse polynomial {text!r}")
        return cls(out)


class UnivarPoly:
    __slots__ = ("coeffs", "var")

    def __init__(self, coeffs: Sequence[int] = (), var: str = "y"):
        c = [int(a) for a in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs = tuple(c)
        self.var = var

    @classmethod
    def monomial(cls, k: int, c: int = 1, var: str = "y") -> "UnivarPoly":
        return cls([0] * k + [c], var)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = UnivarPoly([other])
        if not isinstance(other, UnivarPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def _lift(self, other) -> "UnivarPoly":
        return UnivarPoly([other], self.var) if isinstance(other, int) else other

    def __add__(self, other) -> "UnivarPoly":
        other = self._lift(other)
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (n - len(self.coeffs))
        b = other.coeffs + (0,) * (n - len(other.coeffs))
        return UnivarPoly([x + y for x, y in zip(a, b)], self.var)

    __radd__ = __add__

    def __neg__(self) -> "UnivarPoly":
        return UnivarPoly([-a for a in self.coeffs], self.var)

    def __sub__(self, other) -> "UnivarPoly":
        return self + (-self._lift(other))

    def __rsub__(self, other) -> "UnivarPoly":
        return self._lift(other) - self

    def __mul__(self, other) -> "UnivarPoly":
        other = self._lift(other)
        if not self or not other:
            return UnivarPoly([], self.var)
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return UnivarPoly(out, self.var)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "UnivarPoly":
        out = UnivarPoly([1], self.var)
        for _ in range(e):
            out = out * self
        return out

    def __call__(self, v):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * v + c
        return acc

    def __str__(self) -> str:
        return _join_terms(
            (c, _monomial_text(c, [(self.var, k)])) for k, c in enumerate(self.coeffs) if c
        )

    def __repr__(self) -> str:
        return f"UnivarPoly({str(self)!r})"


def _qdivmod(a: list[Fraction], b: list[Fraction]) -> tuple[list[Fraction], list[Fraction]]:
    a = list(a)
    quot = [Fraction(0)] * max(len(a) - len(b) + 1, 1)
    while len(a) >= len(b) and any(a):
        shift = len(a) - len(b)
        f = a[-1] / b[-1]
        quot[shift] = f
        for i, c in enumerate(b):
            a[i + shift] -= f * c
        a.pop()
        while a and a[-1] == 0:
            a.pop()
    return quot, a


def poly_gcd(f: UnivarPoly, g: UnivarPoly) -> UnivarPoly:
    """Primitive gcd over Q with positive leading coefficient."""
    a = [Fraction(c) for c in f.coeffs]
    b = [Fraction(c) for c in g.coeffs]
    while b:
        _, r = _qdivmod(a, b)
        a, b = b, r
    if not a:
        return UnivarPoly([], f.var)
    # clear denominators, then divide out the content
    den = lcm(*(c.denominator for c in a))
    ints = [int(c * den) for c in a]
    content = gcd(*ints)
    sign = 1 if ints[-1] > 0 else -1
    return UnivarPoly([sign * c // content for c in ints], f.var)


def poly_divmod(f: UnivarPoly, g: UnivarPoly) -> tuple[list[Fraction], list[Fraction]]:
    return _qdivmod([Fraction(c) for c in f.coeffs], [Fraction(c) for c in g.coeffs])


def word_polynomial(w: Word) -> BivarPoly:
    """``P_w(x, y) = sum_{k<n} x^k y^{a_0 + ... + a_k}``; zero for words without X."""
    terms = {}
    s = 0
    for k in range(w.n):
        s += w.exponents[k]
        terms[(k, s)] = 1
    return BivarPoly(terms)


def word_from_polynomial(P: BivarPoly) -> Word:
    """Recover the X-terminated word whose word polynomial is ``P``."""
    n = P.x_degree() + 1
    if n == 0 or len(P) != n or any(c != 1 for c in P.terms.values()):
        raise ValueError(f"{P} is not a word polynomial")
    ys = {}
    for i, j in P.terms:
        ys[i] = j
    exps = [ys[0]] + [ys[k] - ys[k - 1] for k in range(1, n)] + [0]
    if any(a < 0 for a in exps):
        raise ValueError(f"{P} is not a word polynomial")
    return Word(tuple(exps))


def poly_compose_identity(u: Word, w: Word) -> tuple[BivarPoly, BivarPoly]:
    """Both sides of ``P_{u o w} = P_u(x^n y^m, y) P_w`` computed separately."""
    if not (u.ends_with_x() and w.ends_with_x()):
        raise ValueError("both words must end with X")
    lhs = word_polynomial(compose(u, w))
    rhs = word_polynomial(u).substitute_monomial(w.n, w.a_count) * word_polynomial(w)
    return lhs, rhs


def affine_image(w: Word, x: int, y: int, z: int) -> tuple[int, int]:
    """Top row of ``w([[x, z], [0, 1]], [[y, 0], [0, 1]])``.

    Computed by plain 2x2 matrix products, without the word polynomial.
    """
    mats = {"X": ((x, z), (0, 1)), "A": ((y, 0), (0, 1))}
    acc = ((1, 0), (0, 1))
    for letter in w.letters():
        m = mats[letter]
        acc = tuple(
            tuple(sum(acc[r][k] * m[k][c] for k in range(2)) for c in range(2)) for r in range(2)
        )
    return acc[0][0], acc[0][1]


def eval_mod(P: BivarPoly, x: int, y: int, p: int) -> int:
    return P.eval_mod(x, y, p)


def substitute_squares(P: BivarPoly) -> BivarPoly:
    return P.substitute_squares()
