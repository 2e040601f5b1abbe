"""Classification of single words and the exhaustive survey over short words."""
from __future__ import annotations

import csv
import io
import json
from dataclasses import asdict, dataclass, field
from typing import Iterable, Optional

from .certificates import match_families
from .modp import DEFAULT_PMAX, DEFAULT_PMIN, prime_profile
from .radical import render, solve_decomposable
from .words import Word, decompose, enumerate_words, render_word

DECOMPOSABLE = "decomposable"
NOT_UNIVERSAL = "evidence-not-universal"
UNRESOLVED = "unresolved"

DEFAULT_CUTOFF = 13
MAX_SURVEY_LENGTH = 12


@dataclass
class SurveyRow:
    word: str
    length: int
    x_count: int
    decomposable: bool
    verdict: str
    witness: Optional[list[str]] = None
    formula: Optional[str] = None
    exceptional_primes: list[int] = field(default_factory=list)
    certificates: list[str] = field(default_factory=list)
    profile: Optional[list[dict]] = None

    def to_json(self) -> str:
        return json.dumps(asdict(self), sort_keys=True)


def classify(
    w: Word,
    p_min: int = DEFAULT_PMIN,
    p_max: int = DEFAULT_PMAX,
    cutoff: int = DEFAULT_CUTOFF,
) -> tuple[SurveyRow, list]:
    """Classify ``w``; returns the row and the certificate reports used."""
    row = SurveyRow(render_word(w), len(w), w.n, False, UNRESOLVED)
    witness = decompose(w)
    if witness is not None:
        row.decomposable = True
        row.verdict = DECOMPOSABLE
        row.witness = [str(phi) for phi in witness]
        row.formula = render(solve_decomposable(witness))
        return row, []
    if w.n == 0:
        row.verdict = NOT_UNIVERSAL
        return row, []
    prof = prime_profile(w, p_min, p_max)
    row.exceptional_primes = prof.exceptional
    reports = match_families(w)
    row.certificates = [f"{r.family.value}{list(r.params)}" for r in reports]
    late = [p for p in prof.exceptional if p > cutoff]
    if not late or reports:
        row.verdict = NOT_UNIVERSAL
    else:
        row.profile = prof.rows()
    return row, reports


def survey(
    max_len: int,
    p_min: int = DEFAULT_PMIN,
    p_max: int = DEFAULT_PMAX,
    cutoff: int = DEFAULT_CUTOFF,
) -> Iterable[SurveyRow]:
    if max_len > MAX_SURVEY_LENGTH:
        raise ValueError(f"max_len {max_len} exceeds the survey budget {MAX_SURVEY_LENGTH}")
    for w in enumerate_words(max_len, canonical=True):
        yield classify(w, p_min, p_max, cutoff)[0]


def rows_to_csv(rows: Iterable[SurveyRow]) -> str:
    buf = io.StringIO()
    out = csv.writer(buf, lineterminator="\n")
    out.writerow(["word", "length", "x_count", "verdict", "witness", "exceptional_primes", "certificates"])
    for r in rows:
        out.writerow(
            [
                r.word,
                r.length,
                r.x_count,
                r.verdict,
                " ".join(r.witness or []),
                " ".join(map(str, r.exceptional_primes)),
                " ".join(r.certificates),
            ]
        )
    return buf.getvalue()
