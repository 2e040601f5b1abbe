import random

from hypothesis import strategies as st

from udwords import Word


def words(max_len=8, min_x=0, canonical=False):
    """Hypothesis strategy for words given as exponent vectors."""

    @st.composite
    def build(draw):
        n = draw(st.integers(min_value=max(min_x, 1 if canonical else 0), max_value=max_len))
        budget = max_len - n
        exps = []
        for i in range(n + 1):
            if canonical and i in (0, n):
                exps.append(0)
                continue
            e = draw(st.integers(min_value=0, max_value=budget))
            budget -= e
            exps.append(e)
        return Word(tuple(exps))

    return build()


def letters_compose(u: Word, w: Word) -> str:
    # oracle: literal substitution on the letter string
    return "".join(w.letters() if c == "X" else c for c in u.letters())


def rng(seed=0):
    return random.Random(seed)


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.summary_lines():
        terminalreporter.write_line(line)
