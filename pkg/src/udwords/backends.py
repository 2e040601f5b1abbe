"""Uniquely divisible groups with exact arithmetic.

* ``UnipotentMatrix``: upper unitriangular matrices over Q.
* ``NCSeries``: noncommutative power series in ``a, b`` over Q, truncated
  at a fixed degree.
* positive reals in floating point, only as a quick sanity check.

Each comes with a ``GroupBackend`` used by radical-expression evaluation.
"""
from __future__ import annotations

import math
import random
from fractions import Fraction
from typing import Iterable, Sequence

from .words import Word

Rational = Fraction | int


def binomial(r: Rational, k: int) -> Fraction:
    """Generalized binomial coefficient ``r (r-1) ... (r-k+1) / k!``."""
    out = Fraction(1)
    for i in range(k):
        out = out * (Fraction(r) - i) / (i + 1)
    return out


def _frac(v) -> Fraction:
    if isinstance(v, str):
        return Fraction(v.strip())
    return Fraction(v)


# -- unipotent matrices ------------------------------------------------------


class UnipotentMatrix:
    __slots__ = ("rows",)

    def __init__(self, rows: Sequence[Sequence[Rational]], check: bool = True):
        self.rows = tuple(tuple(_frac(v) for v in row) for row in rows)
        if check:
            n = len(self.rows)
            for i, row in enumerate(self.rows):
                if len(row) != n:
                    raise ValueError("matrix must be square")
                if row[i] != 1 or any(row[j] for j in range(i)):
                    raise ValueError("matrix is not upper unitriangular")

    @property
    def n(self) -> int:
        return len(self.rows)

    @classmethod
    def identity(cls, n: int) -> "UnipotentMatrix":
        return cls([[int(i == j) for j in range(n)] for i in range(n)], check=False)

    @classmethod
    def random(cls, n: int, rng: random.Random, span: int = 3, dens: Sequence[int] = (1, 2, 3)):
        rows = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
        for i in range(n):
            for j in range(i + 1, n):
                rows[i][j] = Fraction(rng.randint(-span, span), rng.choice(dens))
        return cls(rows, check=False)

    def __eq__(self, other) -> bool:
        return isinstance(other, UnipotentMatrix) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        i, j = ij
        return self.rows[i][j]

    def __mul__(self, other: "UnipotentMatrix") -> "UnipotentMatrix":
        if other.n != self.n:
            raise ValueError(f"dimension mismatch {self.n} vs {other.n}")
        return UnipotentMatrix(_matmul(self.rows, other.rows), check=False)

    def nilpotent_part(self) -> list[list[Fraction]]:
        return [[v - (i == j) for j, v in enumerate(row)] for i, row in enumerate(self.rows)]

    def inverse(self) -> "UnipotentMatrix":
        return self.power(-1)

    def power(self, r: Rational) -> "UnipotentMatrix":
        """``M^r = sum_k C(r, k) N^k`` with ``M = I + N``; exact for every rational r."""
        r = Fraction(r)
        n = self.n
        N = self.nilpotent_part()
        acc = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
        Nk = [row[:] for row in acc]
        for k in range(1, n):
            Nk = _matmul(Nk, N)
            c = binomial(r, k)
            if c:
                for i in range(n):
                    for j in range(i + k, n):
                        acc[i][j] += c * Nk[i][j]
        return UnipotentMatrix(acc, check=False)

    def __pow__(self, r: Rational) -> "UnipotentMatrix":
        return self.power(r)

    def block(self, size: int) -> "UnipotentMatrix":
        return UnipotentMatrix([row[:size] for row in self.rows[:size]], check=False)

    def column(self, j: int, size: int) -> list[Fraction]:
        return [self.rows[i][j] for i in range(size)]

    def to_strings(self) -> list[list[str]]:
        return [[str(v) for v in row] for row in self.rows]

    @classmethod
    def from_strings(cls, rows) -> "UnipotentMatrix":
        return cls([[_frac(v) for v in row] for row in rows])

    def __repr__(self) -> str:
        return f"UnipotentMatrix({self.to_strings()})"


def _matmul(a, b) -> list[list[Fraction]]:
    n = len(a)
    out = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        ai = a[i]
        for k in range(n):
            aik = ai[k]
            if aik:
                bk = b[k]
                oi = out[i]
                for j in range(n):
                    if bk[j]:
                        oi[j] += aik * bk[j]
    return out


def ut_rational_power(M: UnipotentMatrix, r: Rational) -> UnipotentMatrix:
    return M.power(r)


def ut_solve_product(A_list: Sequence[UnipotentMatrix], B: UnipotentMatrix) -> UnipotentMatrix:
    """Unique X with ``(A_1 X)(A_2 X)...(A_m X) = B`` in UT_n.

    Grows the solution one dimension at a time: with the leading block Y
    already solved, the new last column y solves ``M y = v - u`` where
    ``M = sum_j (prod_{i<j} U_i Y) U_j`` has every diagonal entry equal to m.
    """
    if not A_list:
        raise ValueError("need at least one factor")
    n = B.n
    if any(Ai.n != n for Ai in A_list):
        raise ValueError("dimension mismatch")
    X = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    for size in range(1, n):
        # leading size x size block of X is final; solve column `size`
        U = [[list(Ai.rows[i][:size]) for i in range(size)] for Ai in A_list]
        u_cols = [Ai.column(size, size) for Ai in A_list]
        Y = [X[i][:size] for i in range(size)]
        v = B.column(size, size)
        # u: last column of prod (A_i X) with y = 0, i.e. affine maps (U_i Y, u_i)
        M = [[Fraction(0)] * size for _ in range(size)]
        prefix = [[Fraction(int(i == j)) for j in range(size)] for i in range(size)]
        u = [Fraction(0)] * size
        for Ui, ui in zip(U, u_cols):
            # prefix @ (Ui X_aug) with X_aug = [[Y, 0], [0, 1]]: shift picks up prefix @ ui
            u = [u[i] + sum(prefix[i][k] * ui[k] for k in range(size)) for i in range(size)]
            PU = _matmul(prefix, Ui)
            for i in range(size):
                for j in range(size):
                    M[i][j] += PU[i][j]
            prefix = _matmul(PU, Y)
        rhs = [v[i] - u[i] for i in range(size)]
        y = _solve_upper(M, rhs)
        for i in range(size):
            X[i][size] = y[i]
    return UnipotentMatrix(X, check=False)


def _solve_upper(M: list[list[Fraction]], rhs: list[Fraction]) -> list[Fraction]:
    n = len(rhs)
    y = [Fraction(0)] * n
    for i in range(n - 1, -1, -1):
        s = rhs[i] - sum(M[i][j] * y[j] for j in range(i + 1, n))
        if M[i][i] == 0:
            raise ZeroDivisionError("singular triangular system")
        y[i] = s / M[i][i]
    return y


def product_form(w: Word) -> tuple[list[int], int]:
    """Write ``w = prod_i (A^{e_i} X) * A^{tail}``; returns ``(e, tail)``."""
    if w.n < 1:
        raise ValueError("word must contain X")
    return list(w.exponents[:-1]), w.exponents[-1]


# -- truncated noncommutative series ----------------------------------------


def _series_words(d: int) -> Iterable[str]:
    yield ""
    layer = [""]
    for _ in range(d):
        layer = [w + c for w in layer for c in "ab"]
        yield from layer


class NCSeries:
    """Element of Q<<a, b>> modulo words of length > ``d``.

    ``coeffs`` maps words such as ``"ab"`` to Fractions; the empty word is
    the constant term.
    """

    __slots__ = ("d", "coeffs")

    def __init__(self, coeffs: dict[str, Rational], d: int):
        self.d = d
        clean = {}
        for w, c in coeffs.items():
            if set(w) - {"a", "b"}:
                raise ValueError(f"bad monomial {w!r}")
            c = _frac(c)
            if c and len(w) <= d:
                clean[w] = c
        self.coeffs = clean

    @classmethod
    def one(cls, d: int) -> "NCSeries":
        return cls({"": 1}, d)

    @classmethod
    def generator(cls, letter: str, d: int) -> "NCSeries":
        """``1 + a`` or ``1 + b``."""
        return cls({"": 1, letter: 1}, d)

    @classmethod
    def random(cls, d: int, rng: random.Random, span: int = 2, dens=(1, 2, 3), max_len=None):
        coeffs = {"": Fraction(1)}
        for w in _series_words(d if max_len is None else min(d, max_len)):
            if w:
                coeffs[w] = Fraction(rng.randint(-span, span), rng.choice(dens))
        return cls(coeffs, d)

    @property
    def constant(self) -> Fraction:
        return self.coeffs.get("", Fraction(0))

    def __getitem__(self, w: str) -> Fraction:
        return self.coeffs.get(w, Fraction(0))

    def __eq__(self, other) -> bool:
        return isinstance(other, NCSeries) and self.d == other.d and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.d, frozenset(self.coeffs.items())))

    def _check(self, other: "NCSeries") -> None:
        if other.d != self.d:
            raise ValueError(f"truncation mismatch {self.d} vs {other.d}")

    def __add__(self, other: "NCSeries") -> "NCSeries":
        self._check(other)
        out = dict(self.coeffs)
        for w, c in other.coeffs.items():
            out[w] = out.get(w, 0) + c
        return NCSeries(out, self.d)

    def __sub__(self, other: "NCSeries") -> "NCSeries":
        return self + other.scale(-1)

    def scale(self, c: Rational) -> "NCSeries":
        return NCSeries({w: v * c for w, v in self.coeffs.items()}, self.d)

    def __mul__(self, other: "NCSeries") -> "NCSeries":
        self._check(other)
        d = self.d
        out: dict[str, Fraction] = {}
        for u, cu in self.coeffs.items():
            room = d - len(u)
            for v, cv in other.coeffs.items():
                if len(v) <= room:
                    w = u + v
                    out[w] = out.get(w, 0) + cu * cv
        return NCSeries(out, d)

    def truncate(self, d: int) -> "NCSeries":
        return NCSeries(self.coeffs, d)

    def power(self, r: Rational) -> "NCSeries":
        """``(1 + u)^r = sum_k C(r, k) u^k``, exact up to degree d."""
        if self.constant != 1:
            raise ValueError("rational powers need constant term 1")
        r = Fraction(r)
        u = self - NCSeries.one(self.d)
        acc = NCSeries.one(self.d)
        uk = NCSeries.one(self.d)
        for k in range(1, self.d + 1):
            uk = uk * u
            if not uk.coeffs:
                break
            acc = acc + uk.scale(binomial(r, k))
        return acc

    def __pow__(self, r: Rational) -> "NCSeries":
        return self.power(r)

    def inverse(self) -> "NCSeries":
        return self.power(-1)

    def pairs(self) -> list[tuple[str, str]]:
        """``(word, "p/q")`` sorted by length, then lexicographically."""
        return [(w, str(c)) for w, c in sorted(self.coeffs.items(), key=lambda kv: (len(kv[0]), kv[0]))]

    @classmethod
    def from_pairs(cls, pairs, d: int) -> "NCSeries":
        return cls({w: _frac(c) for w, c in pairs}, d)

    def __repr__(self) -> str:
        return f"NCSeries(d={self.d}, {self.pairs()})"


def series_rational_power(f: NCSeries, r: Rational) -> NCSeries:
    return f.power(r)


def series_solve_product(A_list: Sequence[NCSeries], B: NCSeries, d: int | None = None) -> NCSeries:
    """Unique X with ``prod_i (A_i X) = B`` modulo degree > d.

    Degree by degree: with X known below degree l, the degree-l part of the
    product equals ``m x_w + Q_w``; expanding with ``x_w = 0`` reads off Q_w.
    """
    if not A_list:
        raise ValueError("need at least one factor")
    d = B.d if d is None else d
    if any(s.constant != 1 for s in (*A_list, B)):
        raise ValueError("all series must have constant term 1")
    A_list = [s.truncate(d) for s in A_list]
    B = B.truncate(d)
    m = len(A_list)
    coeffs: dict[str, Fraction] = {"": Fraction(1)}
    for level in range(1, d + 1):
        X = NCSeries(coeffs, level)
        prod = NCSeries.one(level)
        for Ai in A_list:
            prod = prod * Ai.truncate(level) * X
        for w, c in prod.coeffs.items():
            if len(w) == level:
                coeffs[w] = (B[w] - c) / m
        for w, c in B.coeffs.items():
            if len(w) == level and w not in prod.coeffs:
                coeffs[w] = c / m
    return NCSeries(coeffs, d)


def series_to_matrix(f: NCSeries, Na, Nb) -> list[list[Fraction]]:
    """Image of ``f`` under ``a -> Na, b -> Nb`` (strictly upper triangular).

    With ``Na, Nb`` of size ``d + 1`` every word longer than d maps to zero,
    so this is an algebra homomorphism from the truncated series.
    """
    n = len(Na)
    out = [[Fraction(0)] * n for _ in range(n)]
    cache = {"": [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]}

    def word_matrix(w: str):
        if w not in cache:
            cache[w] = _matmul(word_matrix(w[:-1]), Na if w[-1] == "a" else Nb)
        return cache[w]

    for w, c in f.coeffs.items():
        mat = word_matrix(w)
        for i in range(n):
            for j in range(n):
                if mat[i][j]:
                    out[i][j] += c * mat[i][j]
    return out


# -- group backends ----------------------------------------------------------


class GroupBackend:
    """Group operations plus rational powers, and an equality test."""

    exact = True

    def identity(self):
        raise NotImplementedError

    def mul(self, g, h):
        return g * h

    def inv(self, g):
        return g.inverse()

    def rational_power(self, g, r: Rational):
        return g.power(r)

    def random_element(self, rng: random.Random):
        raise NotImplementedError

    def equal(self, g, h) -> bool:
        return g == h

    def product(self, factors):
        out = self.identity()
        for f in factors:
            out = self.mul(out, f)
        return out

    def eval_word(self, w: Word, x, a):
        return self.product(x if c == "X" else a for c in w.letters())


class UTBackend(GroupBackend):
    def __init__(self, n: int):
        if n < 1:
            raise ValueError("dimension must be >= 1")
        self.n = n

    def __repr__(self):
        return f"ut:{self.n}"

    def identity(self):
        return UnipotentMatrix.identity(self.n)

    def random_element(self, rng):
        return UnipotentMatrix.random(self.n, rng)


class SeriesBackend(GroupBackend):
    def __init__(self, d: int):
        if d < 0:
            raise ValueError("degree must be >= 0")
        self.d = d

    def __repr__(self):
        return f"series:{self.d}"

    def identity(self):
        return NCSeries.one(self.d)

    def random_element(self, rng):
        return NCSeries.random(self.d, rng, max_len=2)


class RealBackend(GroupBackend):
    """Positive reals; floating point, compared with a relative tolerance."""

    exact = False

    def __init__(self, rel_tol: float = 1e-12):
        self.rel_tol = rel_tol

    def __repr__(self):
        return "real"

    def identity(self):
        return 1.0

    def _check(self, g):
        if not g > 0:
            raise ValueError(f"positive reals backend got {g}")
        return g

    def mul(self, g, h):
        return self._check(g) * self._check(h)

    def inv(self, g):
        return 1.0 / self._check(g)

    def rational_power(self, g, r):
        return self._check(g) ** float(Fraction(r))

    def random_element(self, rng):
        return math.exp(rng.uniform(-2.0, 2.0))

    def equal(self, g, h) -> bool:
        return math.isclose(g, h, rel_tol=self.rel_tol)


def parse_backend(text: str) -> GroupBackend:
    """``ut:<dim>``, ``series:<degree>`` or ``real``."""
    kind, _, arg = text.partition(":")
    if kind == "ut" and arg.isdigit():
        return UTBackend(int(arg))
    if kind == "series" and arg.isdigit():
        return SeriesBackend(int(arg))
    if kind == "real" and not arg:
        return RealBackend()
    raise ValueError(f"unknown backend {text!r}; use ut:<dim>, series:<degree> or real")
