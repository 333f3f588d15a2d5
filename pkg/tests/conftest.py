import random
from fractions import Fraction

import pytest
from hypothesis import settings

from qcube.fourier import FunctionTable
from qcube.hamming import SpaceParams

settings.register_profile("exact", deadline=None, max_examples=60)
settings.load_profile("exact")


def random_rational(rng: random.Random, lo: int = -5, hi: int = 5) -> Fraction:
    return Fraction(rng.randint(lo, hi), rng.randint(1, 4))


def random_table(rng: random.Random, p: SpaceParams) -> FunctionTable:
    return FunctionTable(p, tuple(random_rational(rng) for _ in range(p.size)))


@pytest.fixture
def rng():
    return random.Random(20131009)


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
