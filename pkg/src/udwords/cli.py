"""Command line entry point: ``udwords <subcommand> ...``.

Exit codes: 0 success, 1 usage or input error, 2 unresolved rows in a survey.
"""
from __future__ import annotations

import argparse
import json
import random
import sys
from pathlib import Path
from typing import Optional, Sequence

from . import radical
from .backends import (
    NCSeries,
    SeriesBackend,
    UnipotentMatrix,
    UTBackend,
    parse_backend,
    product_form,
    series_solve_product,
    ut_solve_product,
)
from .gp import GpElement, make_group
from .modp import DEFAULT_PMAX, DEFAULT_PMIN, find_suitable_prime, prime_profile
from .poly import word_polynomial
from .survey import DEFAULT_CUTOFF, UNRESOLVED, classify, rows_to_csv, survey
from .words import Word, WordSyntaxError, decompose, parse_word, render_word

RICCATI = Word((0, 1, 0))


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def cmd_classify(w: Word, p_min=DEFAULT_PMIN, p_max=DEFAULT_PMAX, cutoff=DEFAULT_CUTOFF) -> dict:
    row, reports = classify(w, p_min, p_max, cutoff)
    out = {
        "word": row.word,
        "verdict": row.verdict,
        "decomposable": row.decomposable,
        "witness": row.witness,
        "formula": row.formula,
    }
    if not row.decomposable and w.n:
        out["range"] = [p_min, p_max]
        out["exceptional_primes"] = row.exceptional_primes
        out["certificates"] = [r.to_dict() for r in reports]
    return out


def _element(G, g: GpElement) -> list[int]:
    return [G.p, g.gamma, g.beta]


def cmd_counterexample(w: Word, p_min: int = DEFAULT_PMIN, tries: int = 50) -> dict:
    """Build ``(a, b)`` in some G_p with ``w(X, a) = b`` unsolvable, plus a collision."""
    if decompose(w) is not None:
        raise UsageError(f"{render_word(w)} is totally decomposable; it has no counterexample")
    if w.n < 1:
        raise UsageError("word must contain X")
    skipped = []
    lower = p_min - 1
    for _ in range(tries):
        p = find_suitable_prime(w.n, lower)
        G = make_group(p)
        data = G.counterexample_data(w)
        if data is None:
            skipped.append(p)
            lower = p
            continue
        a, b = data["a"], data["b"]
        verified = G.verify_no_solution(w, a, b)
        collision = G.find_collision(w, a)
        return {
            "word": render_word(w),
            "p": p,
            "q": G.q,
            "t": G.t,
            "skipped_primes": skipped,
            "witness": {k: data[k] for k in ("x", "y", "delta", "alpha")},
            "a": _element(G, a),
            "b": _element(G, b),
            "elements_checked": G.order,
            "no_solution_verified": verified,
            "collision": None
            if collision is None
            else {
                "g1": _element(G, collision[0]),
                "g2": _element(G, collision[1]),
                "b_prime": _element(G, collision[2]),
            },
        }
    raise RuntimeError(f"no prime with a mod-p witness after {tries} tries (skipped {skipped})")


def _serialize(g):
    if isinstance(g, UnipotentMatrix):
        return g.to_strings()
    return [list(pair) for pair in g.pairs()]


def _load_instance(path: Path, backend):
    data = json.loads(path.read_text())
    if isinstance(backend, UTBackend):
        A, B = UnipotentMatrix.from_strings(data["A"]), UnipotentMatrix.from_strings(data["B"])
        if A.n != backend.n or B.n != backend.n:
            raise UsageError(f"instance dimension does not match {backend}")
        return A, B
    return NCSeries.from_pairs(data["A"], backend.d), NCSeries.from_pairs(data["B"], backend.d)


def cmd_solve(w: Word, backend_spec: str, seed: int = 0, instance: Optional[Path] = None) -> dict:
    """Solve ``w(X, A) = B`` with the recursive product solver and cross-check."""
    backend = parse_backend(backend_spec)
    if not isinstance(backend, (UTBackend, SeriesBackend)):
        raise UsageError("solve needs ut:<dim> or series:<degree>")
    if w.n < 1:
        raise UsageError("word must contain X")
    if instance is not None:
        A, B = _load_instance(instance, backend)
    else:
        rng = random.Random(seed)
        A, B = backend.random_element(rng), backend.random_element(rng)
    heads, tail = product_form(w)
    factors = [A.power(e) for e in heads]
    target = B * A.power(-tail)
    if isinstance(backend, UTBackend):
        X = ut_solve_product(factors, target)
    else:
        X = series_solve_product(factors, target, backend.d)
    checks = {"equation": backend.eval_word(w, X, A) == B}
    witness = decompose(w)
    if witness is not None:
        formula = radical.solve_decomposable(witness)
        checks["radical_formula"] = radical.evaluate(formula, backend, A, B) == X
    if w == RICCATI:
        for i, form in enumerate(radical.riccati_forms(), 1):
            checks[f"riccati_form_{i}"] = radical.evaluate(form, backend, A, B) == X
    return {
        "word": render_word(w),
        "backend": backend_spec,
        "A": _serialize(A),
        "B": _serialize(B),
        "X": _serialize(X),
        "checks": checks,
        "ok": all(checks.values()),
    }


def _emit(obj, as_json: bool, out=None) -> None:
    out = out or sys.stdout
    if as_json:
        print(json.dumps(obj, sort_keys=True), file=out)
        return
    for k, v in obj.items():
        print(f"{k}: {v}", file=out)


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="udwords", description="Word equations over uniquely divisible groups.")
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def word_cmd(name, help_):
        p = sub.add_parser(name, help=help_)
        p.add_argument("word")
        p.add_argument("--json", action="store_true")
        return p

    def prime_flags(p):
        p.add_argument("--pmin", type=int, default=DEFAULT_PMIN)
        p.add_argument("--pmax", type=int, default=DEFAULT_PMAX)

    p = word_cmd("classify", "decide decomposability, else gather mod-p evidence")
    prime_flags(p)
    p.add_argument("--cutoff", type=int, default=DEFAULT_CUTOFF)
    word_cmd("decompose", "print a decomposition witness")
    word_cmd("poly", "print the word polynomial")
    p = word_cmd("scan", "mod-p profile of P_w(x^2, y^2)")
    prime_flags(p)
    p = word_cmd("counterexample", "finite group with w(X, a) = b unsolvable")
    p.add_argument("--pmin", type=int, default=DEFAULT_PMIN)
    p = word_cmd("solve", "solve in an exact backend")
    p.add_argument("--backend", default="ut:3")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--instance", type=Path)

    p = sub.add_parser("survey", help="classify every canonical word up to a length")
    p.add_argument("--max-len", type=int, default=10)
    prime_flags(p)
    p.add_argument("--cutoff", type=int, default=DEFAULT_CUTOFF)
    p.add_argument("--out", type=Path, help="JSON-lines output; a .csv summary is written next to it")
    p.add_argument("--json", action="store_true")
    return ap


def run(args: argparse.Namespace) -> int:
    if args.command == "survey":
        rows = list(survey(args.max_len, args.pmin, args.pmax, args.cutoff))
        lines = "".join(r.to_json() + "\n" for r in rows)
        if args.out:
            args.out.write_text(lines)
            args.out.with_suffix(".csv").write_text(rows_to_csv(rows))
        else:
            sys.stdout.write(lines if args.json else rows_to_csv(rows))
        unresolved = [r.word for r in rows if r.verdict == UNRESOLVED]
        counts = {}
        for r in rows:
            counts[r.verdict] = counts.get(r.verdict, 0) + 1
        print(f"{len(rows)} words: {counts}", file=sys.stderr)
        if unresolved:
            print(f"unresolved: {' '.join(unresolved)}", file=sys.stderr)
            return 2
        return 0

    w = parse_word(args.word)
    if args.command == "classify":
        _emit(cmd_classify(w, args.pmin, args.pmax, args.cutoff), args.json)
    elif args.command == "decompose":
        witness = decompose(w)
        _emit(
            {
                "word": render_word(w),
                "decomposable": witness is not None,
                "witness": None if witness is None else [str(phi) for phi in witness],
            },
            args.json,
        )
    elif args.command == "poly":
        P = word_polynomial(w)
        _emit({"word": render_word(w), "P": str(P), "P_squares": str(P.substitute_squares())}, args.json)
    elif args.command == "scan":
        prof = prime_profile(w, args.pmin, args.pmax)
        if args.json:
            print(prof.to_json())
        else:
            sys.stdout.write(prof.to_csv())
        print(f"exceptional primes: {prof.exceptional}", file=sys.stderr)
    elif args.command == "counterexample":
        _emit(cmd_counterexample(w, args.pmin), args.json)
    elif args.command == "solve":
        report = cmd_solve(w, args.backend, args.seed, args.instance)
        _emit(report, args.json)
        if not report["ok"]:
            return 1
    return 0


def main(argv: Optional[Sequence[str]] = None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return exc.code
    try:
        return run(args)
    except (WordSyntaxError, UsageError, ValueError) as exc:
        print(f"udwords: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
