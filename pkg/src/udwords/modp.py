"""Solutions of ``P(x, y) = 0`` with ``x, y`` nonzero mod p, and prime profiles."""
from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from math import gcd
from typing import Optional

import numpy as np

from .poly import BivarPoly, word_polynomial
from .words import Word, render_word

DEFAULT_PMIN = 5
DEFAULT_PMAX = 499
_ROW_BLOCK = 16


def primes_between(lo: int, hi: int) -> list[int]:
    """Primes ``p`` with ``lo <= p <= hi``."""
    if hi < 2:
        return []
    sieve = np.ones(hi + 1, dtype=bool)
    sieve[:2] = False
    for k in range(2, int(hi**0.5) + 1):
        if sieve[k]:
            sieve[k * k :: k] = False
    return [int(p) for p in np.flatnonzero(sieve) if p >= lo]


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    k = 3
    while k * k <= n:
        if n % k == 0:
            return False
        k += 2
    return True


def prime_factors(n: int) -> list[int]:
    out = []
    k = 2
    while k * k <= n:
        if n % k == 0:
            out.append(k)
            while n % k == 0:
                n //= k
        k += 1
    if n > 1:
        out.append(n)
    return out


def find_nonzero_solution(P: BivarPoly, p: int) -> Optional[tuple[int, int]]:
    """First ``(x, y)`` in ``(F_p^*)^2`` with ``P(x, y) = 0``, scanning x then y upward."""
    if p < 3 or p >= 2**31:
        raise ValueError(f"prime {p} out of supported range")
    if not P:
        return (1, 1)
    dy = P.y_degree()
    xs = np.arange(1, p, dtype=np.int64)
    ys = np.arange(1, p, dtype=np.int64)
    # coefficient of y^j, as a function of x, for every nonzero x
    by_j: dict[int, list[tuple[int, int]]] = {}
    for (i, j), c in P.terms.items():
        by_j.setdefault(j, []).append((i, c % p))
    for start in range(0, p - 1, _ROW_BLOCK):
        xb = xs[start : start + _ROW_BLOCK]
        coeff = np.zeros((dy + 1, len(xb)), dtype=np.int64)
        for j, items in by_j.items():
            for i, c in items:
                coeff[j] = (coeff[j] + c * _powmod(xb, i, p)) % p
        acc = np.zeros((len(xb), p - 1), dtype=np.int64)
        for j in range(dy, -1, -1):
            acc = (acc * ys + coeff[j][:, None]) % p
        hits = np.argwhere(acc == 0)
        if len(hits):
            r, col = hits[0]
            return int(xb[r]), int(ys[col])
    return None


def _powmod(base: np.ndarray, e: int, p: int) -> np.ndarray:
    out = np.ones_like(base)
    b = base % p
    while e:
        if e & 1:
            out = out * b % p
        b = b * b % p
        e >>= 1
    return out


def sum_of_squares_witness(p: int) -> tuple[int, int]:
    """Nonzero ``(a, b)`` with ``1 + a^2 + b^2 = 0 mod p``.

    Scans ``a`` upward and looks ``-1 - a^2`` up among the squares.  A hit
    with ``b = 0`` is repaired to ``(-1 + 1/4, a + a/4)``.  For p = 5 no
    nonzero pair exists and ValueError is raised.
    """
    if p < 5 or not is_prime(p):
        raise ValueError(f"need a prime p >= 5, got {p}")
    roots: dict[int, int] = {}
    for b in range(p - 1, -1, -1):
        roots[b * b % p] = b
    zero_hit = None
    for a in range(1, p):
        target = (-1 - a * a) % p
        if target in roots:
            b = roots[target]
            if b:
                return a, b
            zero_hit = zero_hit or a
    if zero_hit is not None:
        inv4 = pow(4, -1, p)
        a, b = (-1 + inv4) % p, (zero_hit + zero_hit * inv4) % p
        if a and b and (1 + a * a + b * b) % p == 0:
            return a, b
    raise ValueError(f"1 + a^2 + b^2 = 0 has no solution with a, b nonzero mod {p}")


def find_suitable_prime(
    n: int, lower: int, smooth_bound: Optional[int] = None, cap: int = 10**6
) -> int:
    """Smallest prime ``p > lower`` with ``gcd((p-1)/2, n) = 1``.

    With ``smooth_bound`` set, ``(p-1)/2`` must also avoid every prime
    factor ``<= smooth_bound``.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    small = [] if smooth_bound is None else primes_between(2, smooth_bound)
    p = max(lower + 1, 3)
    while p <= cap:
        if is_prime(p):
            q = (p - 1) // 2
            if gcd(q, n) == 1 and all(q % ell for ell in small):
                return p
        p += 1
    raise RuntimeError(f"no suitable prime for n={n} in ({lower}, {cap}]")


@dataclass
class ProfileEntry:
    p: int
    solvable: bool
    witness: Optional[tuple[int, int]] = None


@dataclass
class PrimeProfile:
    word: Word
    p_min: int
    p_max: int
    entries: list[ProfileEntry] = field(default_factory=list)

    def __post_init__(self):
        self._poly = word_polynomial(self.word).substitute_squares()

    @property
    def range(self) -> tuple[int, int]:
        return self.p_min, self.p_max

    @property
    def exceptional(self) -> list[int]:
        return [e.p for e in self.entries if not e.solvable]

    def add(self, p: int, witness: Optional[tuple[int, int]]) -> None:
        if witness is not None:
            x, y = witness
            if x % p == 0 or y % p == 0 or self._poly.eval_mod(x, y, p):
                raise ValueError(f"invalid witness {witness} for {self.word} at p={p}")
        self.entries.append(ProfileEntry(p, witness is not None, witness))

    def rows(self) -> list[dict]:
        return [
            {"p": e.p, "solvable": e.solvable, "witness": list(e.witness) if e.witness else None}
            for e in self.entries
        ]

    def to_json(self) -> str:
        return "\n".join(json.dumps(r, sort_keys=True) for r in self.rows())

    def to_csv(self) -> str:
        buf = io.StringIO()
        out = csv.writer(buf, lineterminator="\n")
        out.writerow(["word", "p", "solvable", "x", "y"])
        for e in self.entries:
            x, y = e.witness or ("", "")
            out.writerow([render_word(self.word), e.p, int(e.solvable), x, y])
        return buf.getvalue()


def prime_profile(w: Word, p_min: int = DEFAULT_PMIN, p_max: int = DEFAULT_PMAX) -> PrimeProfile:
    if w.n < 1:
        raise ValueError("word must contain X")
    if p_min < 3:
        raise ValueError("p_min must be >= 3")
    prof = PrimeProfile(w, p_min, p_max)
    P = word_polynomial(w).substitute_squares()
    for p in primes_between(p_min, p_max):
        prof.add(p, find_nonzero_solution(P, p))
    return prof
