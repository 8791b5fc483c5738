import numpy as np
import pytest

from zcset.construct import ConstructionParams
from zcset.family import ZcsFamily

# An optimal (6, 4, 6, 4)-ZCS over q = 6, transcribed digit by digit.
REFERENCE_ROWS = [
    ["000003", "030300", "003303", "033000"],
    ["012342", "042045", "015042", "045345"],
    ["024021", "054324", "021321", "051024"],
    ["030300", "000003", "033000", "003303"],
    ["042045", "012342", "045345", "015042"],
    ["054324", "024021", "051024", "021321"],
]


def reference_array() -> np.ndarray:
    return np.array([[[int(ch) for ch in row] for row in flock] for flock in REFERENCE_ROWS])


@pytest.fixture
def reference_family() -> ZcsFamily:
    return ZcsFamily.from_array(reference_array(), 6)


@pytest.fixture
def reference_params() -> ConstructionParams:
    return ConstructionParams(q=6, b=6, m=3, n=1, blocks=((1, 3), (2,)), beta=(0, 0, 0, 0))


def complex_set_correlation(a: np.ndarray, b: np.ndarray, q: int, u: int) -> complex:
    """Floating brute force of the flock correlation, straight from the sum."""
    N, L = a.shape
    xa = np.exp(2j * np.pi * a / q)
    xb = np.exp(2j * np.pi * b / q)
    total = 0j
    for lam in range(N):
        for i in range(L):
            j = i + u
            if 0 <= j < L:
                total += xa[lam, j] * np.conj(xb[lam, i])
    return total


# acceptance reporting -------------------------------------------------------

_ACCEPTANCE: list[tuple[int, str, str, float]] = []


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker is None:
        return
    if rep.when == "call" or (rep.when == "setup" and rep.outcome != "passed"):
        number, title = marker.args
        status = "PASS" if rep.passed else "FAIL"
        _ACCEPTANCE.append((number, title, status, rep.duration))


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number, title, status, duration in sorted(_ACCEPTANCE):
        terminalreporter.write_line(f"[{status}] criterion {number}: {title} ({duration:.2f} s)")
