import random
from fractions import Fraction

import pytest

from ramanujan_vf.graded import GradedPoly

SWEEP = (5, 7, 11, 13, 17, 19, 23, 29, 31)

_acceptance_lines: list[str] = []


@pytest.fixture(scope="session")
def acceptance_log():
    return _acceptance_lines


def pytest_terminal_summary(terminalreporter):
    if _acceptance_lines:
        terminalreporter.section("acceptance criteria")
        for line in _acceptance_lines:
            terminalreporter.write_line(line)


def random_poly(rng: random.Random, p=None, max_exp=3, max_terms=4, with_e2=True):
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        exp = (rng.randint(0, max_exp) if with_e2 else 0, rng.randint(0, max_exp), rng.randint(0, max_exp))
        if p is None:
            c = Fraction(rng.randint(-20, 20), rng.randint(1, 6))
        else:
            c = rng.randrange(p)
        terms[exp] = c
    return GradedPoly(terms, p)
