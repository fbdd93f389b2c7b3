from fractions import Fraction

import hypothesis.strategies as st
from hypothesis import settings

from pompeiu import free_group as fg

settings.register_profile("default", max_examples=40, deadline=None)
settings.load_profile("default")

rationals = st.fractions(min_value=-5, max_value=5, max_denominator=6)


def raw_letters(k, max_len):
    return st.lists(st.sampled_from([s * i for i in range(1, k + 1) for s in (1, -1)]), max_size=max_len)


def words(k, max_len):
    return raw_letters(k, max_len).map(lambda ls: fg.reduce(ls, k)).filter(lambda w: len(w) <= max_len)


def elements(k, radius, max_terms=6):
    return st.dictionaries(words(k, radius), rationals, max_size=max_terms).map(
        lambda d: fg.GroupRingElement(k, d)
    )


@st.composite
def ball_functions(draw, k, radius):
    n = fg.ball_size(k, radius)
    vals = draw(st.lists(rationals, min_size=n, max_size=n))
    return fg.BallFunction(k, radius, tuple(Fraction(v) for v in vals))


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
