"""Words over the alphabet {X, A}, composition, and total decomposability.

A word ``A^{a_0} X A^{a_1} X ... X A^{a_n}`` is stored as its exponent
vector ``(a_0, ..., a_n)``; ``n`` is the number of X letters.
"""
from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Optional, Sequence

MAX_SEARCH_LENGTH = 32


class WordSyntaxError(ValueError):
    def __init__(self, message: str, text: str, position: int):
        super().__init__(f"{message} at position {position} in {text!r}")
        self.text = text
        self.position = position


@dataclass(frozen=True, order=True)
class Word:
    exponents: tuple[int, ...] = (0,)

    def __post_init__(self):
        exps = tuple(int(a) for a in self.exponents)
        if not exps or any(a < 0 for a in exps):
            raise ValueError(f"bad exponent vector {self.exponents!r}")
        object.__setattr__(self, "exponents", exps)

    @property
    def n(self) -> int:
        """Number of X letters."""
        return len(self.exponents) - 1

    @property
    def a_count(self) -> int:
        return sum(self.exponents)

    def __len__(self) -> int:
        return self.n + self.a_count

    def letters(self) -> str:
        return "X".join("A" * a for a in self.exponents)

    @classmethod
    def from_letters(cls, letters: str) -> "Word":
        if set(letters) - {"X", "A"}:
            raise ValueError(f"not a word over {{X, A}}: {letters!r}")
        return cls(tuple(len(run) for run in letters.split("X")))

    def __str__(self) -> str:
        return render_word(self)

    def __repr__(self) -> str:
        return f"Word({render_word(self) or '1'!r})"

    def starts_with_x(self) -> bool:
        return self.n >= 1 and self.exponents[0] == 0

    def ends_with_x(self) -> bool:
        return self.n >= 1 and self.exponents[-1] == 0

    def __add__(self, other: "Word") -> "Word":
        """Concatenation."""
        a, b = self.exponents, other.exponents
        return Word(a[:-1] + (a[-1] + b[0],) + b[1:])

    def __mul__(self, times: int) -> "Word":
        out = Word()
        for _ in range(times):
            out = out + self
        return out


X = Word((0, 0))
A = Word((1,))

_TOKEN = re.compile(r"\s*(?:([XA])\s*(?:\^\s*(\d+))?)")


def parse_word(text: str) -> Word:
    """Parse text such as ``"X^2AX"`` (whitespace ignored) into a Word."""
    letters = []
    pos = 0
    while pos < len(text):
        if text[pos].isspace():
            pos += 1
            continue
        m = _TOKEN.match(text, pos)
        if m is None:
            raise WordSyntaxError(f"unexpected character {text[pos]!r}", text, pos)
        letter, exp = m.group(1), m.group(2)
        if exp is None:
            if re.match(r"\s*\^", text[m.end():]):
                raise WordSyntaxError("missing exponent", text, m.end())
            count = 1
        else:
            count = int(exp)
            if count == 0:
                raise WordSyntaxError("exponent must be positive", text, m.start(2))
        letters.append(letter * count)
        pos = m.end()
    return Word.from_letters("".join(letters))


def _power(letter: str, count: int) -> str:
    if count == 0:
        return ""
    return letter if count == 1 else f"{letter}^{count}"


def render_word(w: Word) -> str:
    """Compact caret form, e.g. ``X^2AX``.  The empty word renders as ``""``."""
    out = []
    for run in re.finditer(r"X+|A+", w.letters()):
        out.append(_power(run.group()[0], len(run.group())))
    return "".join(out)


def compose(u: Word, w: Word) -> Word:
    """Replace every X in ``u`` by ``w``."""
    b = u.exponents
    out = [b[0]]
    for bi in b[1:]:
        out[-1] += w.exponents[0]
        out.extend(w.exponents[1:])
        out[-1] += bi
    return Word(tuple(out))


@dataclass(frozen=True)
class Morphism:
    """One of the elementary maps ``l: w -> Aw``, ``r: w -> wA`` and
    ``pi_{m,k}: w -> (wA^k)^m w``."""

    kind: str
    m: int = 0
    k: int = 0

    def __post_init__(self):
        if self.kind not in ("L", "R", "Pi"):
            raise ValueError(f"unknown morphism kind {self.kind!r}")
        if self.kind == "Pi" and (self.m < 1 or self.k < 0):
            raise ValueError(f"Pi needs m >= 1 and k >= 0, got m={self.m}, k={self.k}")
        if self.kind != "Pi" and (self.m or self.k):
            raise ValueError(f"{self.kind} takes no parameters")

    def __str__(self) -> str:
        return f"Pi({self.m},{self.k})" if self.kind == "Pi" else self.kind

    @classmethod
    def parse(cls, text: str) -> "Morphism":
        text = text.strip()
        if text in ("L", "R"):
            return cls(text)
        m = re.fullmatch(r"Pi\((\d+),\s*(\d+)\)", text)
        if m is None:
            raise ValueError(f"cannot parse morphism {text!r}")
        return cls("Pi", int(m.group(1)), int(m.group(2)))


L = Morphism("L")
R = Morphism("R")


def Pi(m: int, k: int) -> Morphism:
    return Morphism("Pi", m, k)


def apply_morphism(phi: Morphism, w: Word) -> Word:
    if phi.kind == "L":
        return A + w
    if phi.kind == "R":
        return w + A
    return (w + A * phi.k) * phi.m + w


def replay(witness: Sequence[Morphism], base: Word = X) -> Word:
    """Apply ``witness`` innermost-first starting from ``base``."""
    w = base
    for phi in witness:
        w = apply_morphism(phi, w)
    return w


def decompose(w: Word, max_length: int = MAX_SEARCH_LENGTH) -> Optional[list[Morphism]]:
    """Return a decomposition witness for ``w`` (innermost map first), or None.

    Branch order is L, then R, then Pi by increasing length of the inner
    word; the first witness found is returned.
    """
    if len(w) > max_length:
        raise ValueError(f"word of length {len(w)} exceeds search budget {max_length}")
    found = _decompose(w.letters())
    return None if found is None else list(found)


@lru_cache(maxsize=None)
def _decompose(s: str) -> Optional[tuple[Morphism, ...]]:
    if s == "X":
        return ()
    if "X" not in s:
        return None
    if s[0] == "A":
        sub = _decompose(s[1:])
        if sub is not None:
            return sub + (L,)
    if s[-1] == "A":
        sub = _decompose(s[:-1])
        if sub is not None:
            return sub + (R,)
    total = len(s)
    for vlen in range(1, total // 2 + 1):
        v = s[:vlen]
        for m in range(1, (total - vlen) // vlen + 1):
            rest = total - (m + 1) * vlen
            if rest % m:
                continue
            k = rest // m
            if s == (v + "A" * k) * m + v:
                sub = _decompose(v)
                if sub is not None:
                    return sub + (Pi(m, k),)
    return None


def is_totally_decomposable(w: Word) -> bool:
    return decompose(w) is not None


def enumerate_words(max_len: int, canonical: bool = False) -> Iterator[Word]:
    """All nonempty words of length <= max_len, by length then X-before-A.

    With ``canonical`` only words that begin and end with X are produced.
    """
    if max_len < 1:
        raise ValueError("max_len must be >= 1")
    for length in range(1, max_len + 1):
        if canonical:
            if length == 1:
                yield X
                continue
            for middle in itertools.product("XA", repeat=length - 2):
                yield Word.from_letters("X" + "".join(middle) + "X")
        else:
            for letters in itertools.product("XA", repeat=length):
                yield Word.from_letters("".join(letters))
