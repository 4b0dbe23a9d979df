import random
from fractions import Fraction
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from leibsuper import linalg
from leibsuper.algebra import GradedMap
from leibsuper.catalog import registry

DATA = Path(__file__).parent / "data"

settings.register_profile("repo", deadline=None, max_examples=30,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("repo")

# small Leibniz laws used as seeds for property tests
SEED_LAWS = [
    ("zf_model", 2, 2, {}),
    ("zf_2_2.mu1", 2, 2, {"alpha": 1}),
    ("zf_2_2.mu2", 2, 2, {}),
    ("R32", 3, 2, {}),
    ("zf_2_3.mu6", 2, 3, {}),
    ("zf_2_3.mu5", 2, 3, {}),
    ("maxnil", 2, 3, {}),
    ("zf_3_3.mu12", 3, 3, {}),
    ("zf_n1_2.mu3", 3, 2, {}),
]


def seed_law(i):
    name, n, m, p = SEED_LAWS[i]
    return registry.build(name, n, m, p)


def _block(rng, k):
    while True:
        b = [[Fraction(rng.randint(-3, 3)) for _ in range(k)] for _ in range(k)]
        if k == 0 or linalg.determinant(b) != 0:
            return b


def random_map(n, m, rng):
    return GradedMap(_block(rng, n), _block(rng, m))


@st.composite
def graded_maps(draw, n, m):
    return random_map(n, m, random.Random(draw(st.integers(0, 10**6))))


@pytest.fixture
def data_dir():
    return DATA


# one line per acceptance criterion, printed after the run
ACCEPTANCE_LINES: list[str] = []


def record_criterion(line: str) -> None:
    ACCEPTANCE_LINES.append(line)
    print(line)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1])):
            terminalreporter.write_line(line)
