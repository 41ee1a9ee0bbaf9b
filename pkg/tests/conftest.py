import random

import pytest

from atgrs.field import make_field
from atgrs.tgrs import CodeSpec

TABLE_ALPHA = (1, 2, 3, 5, 6, 8, 9, 10)

# twist matrices listed for q = 11, n = 8
TWIST_TABLE = {
    3: ((0, 0, 0, 1, 10), (0, 0, 0, 0, 7), (0, 0, 0, 0, 0)),
    4: ((0, 0, 0, 4), (0, 0, 0, 7), (0, 0, 0, 3), (0, 0, 2, 6)),
    5: ((0, 0, 0), (0, 10, 0), (0, 9, 8), (0, 0, 0), (0, 0, 0)),
    6: ((7, 1), (4, 3), (0, 0), (0, 0), (0, 0), (0, 0)),
    7: ((0,), (0,), (0,), (0,), (4,), (6,), (10,)),
}


@pytest.fixture(scope="session")
def gf11():
    return make_field(11)


@pytest.fixture(scope="session")
def gf7():
    return make_field(7)


@pytest.fixture(scope="session")
def gf16():
    return make_field(2, 4, "auto")


@pytest.fixture(scope="session")
def fields():
    return {q: f for q, f in [(7, make_field(7)), (11, make_field(11)), (13, make_field(13)),
                              (16, make_field(2, 4, "auto")), (17, make_field(17))]}


def random_twist(rng, gf, k, n, density):
    return [[rng.randrange(1, gf.q) if rng.random() < density else 0 for _ in range(n - k)] for _ in range(k)]


def random_spec(rng, gf, nmax=10, density=None, with_v=False):
    n = rng.randint(4, min(nmax, gf.q))
    k = rng.randint(3, n - 1)
    alpha = rng.sample(range(gf.q), n)
    if density is None:
        density = rng.choice([0.15, 0.3, 1.0])
    v = [rng.randrange(1, gf.q) for _ in range(n)] if with_v else None
    return CodeSpec(gf, n, k, alpha, random_twist(rng, gf, k, n, density), v)


@pytest.fixture
def rng():
    return random.Random(20240611)


# -- acceptance summary -------------------------------------------------------------

_acceptance = []


def pytest_runtest_logreport(report):
    if report.when == "call" and "test_acceptance.py" in report.nodeid:
        _acceptance.append((report.nodeid.split("::", 1)[1], report.outcome))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome in _acceptance:
        terminalreporter.write_line(f"{'PASS' if outcome == 'passed' else 'FAIL'}  {name}")
