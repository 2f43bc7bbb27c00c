import random

import pytest
from hypothesis import settings

from lagsphere.sl2_arith import UniMat

settings.register_profile("ci", derandomize=True, deadline=None, max_examples=200)
settings.load_profile("ci")


def random_unimat(rng: random.Random, bound: int = 50) -> UniMat:
    """Random det-1 matrix: random coprime bottom row completed by extended gcd."""
    from lagsphere.congruence import ext_gcd
    while True:
        c, d = rng.randint(-bound, bound), rng.randint(-bound, bound)
        g, s, t = ext_gcd(d, c)
        if g == 1:
            k = rng.randint(-3, 3)
            return UniMat(s + k * c, -t + k * d, c, d)


@pytest.fixture
def rng():
    return random.Random(20240611)


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
