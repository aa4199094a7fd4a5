import random
import time

import pytest

from qgf4.addcode import AdditiveCode, dual
from qgf4.gf4core import SymplecticVector

_criteria: dict[int, tuple[str, str, float]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(num, title): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None:
        return
    num, title = mark.args
    if rep.when == "call" or rep.failed or rep.skipped:
        status = "PASS" if rep.passed else ("SKIP" if rep.skipped else "FAIL")
        _, old, secs = _criteria.get(num, (title, "PASS", 0.0))
        if old != "PASS":
            status = old
        _criteria[num] = (title, status, secs + rep.duration)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.write_sep("=", "acceptance criteria")
    for num in sorted(_criteria):
        title, status, secs = _criteria[num]
        terminalreporter.write_line(f"criterion {num:2d} {status}  {title}  ({secs:.2f} s)")


def random_vector(rng: random.Random, n: int) -> SymplecticVector:
    return SymplecticVector(n, rng.getrandbits(n), rng.getrandbits(n))


def random_code(rng: random.Random, n: int, r: int | None = None) -> AdditiveCode:
    if r is None:
        r = rng.randint(0, 2 * n)
    return AdditiveCode(n, [random_vector(rng, n) for _ in range(r)])


def random_self_orthogonal(rng: random.Random, n: int, r: int | None = None) -> AdditiveCode:
    """Grow a self-orthogonal code one random dual word at a time."""
    if r is None:
        r = rng.randint(0, n)
    C = AdditiveCode(n)
    while C.r < r:
        D = dual(C)
        v = SymplecticVector(n, 0, 0)
        for g in D.generators:
            if rng.getrandbits(1):
                v = v + g
        if v not in C:
            C = AdditiveCode(n, list(C.generators) + [v])
    return C


@pytest.fixture
def rng():
    return random.Random(20240607)


@pytest.fixture
def stopwatch():
    class Watch:
        def __enter__(self):
            self.t0 = time.perf_counter()
            return self

        def __exit__(self, *exc):
            self.seconds = time.perf_counter() - self.t0

    return Watch
