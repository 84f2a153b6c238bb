import zlib

import numpy as np
import pytest

from bcx import Basis, LinMap, linalg

ACCEPTANCE_RESULTS = []


def random_complex(rng, *shape, scale=1.0):
    return scale * (rng.standard_normal(shape) + 1j * rng.standard_normal(shape))


def random_rank_matrix(rng, m, n, r):
    """An m x n complex matrix of rank r (almost surely)."""
    if r == 0:
        return np.zeros((m, n), dtype=complex)
    return random_complex(rng, m, r) @ random_complex(rng, r, n)


def random_invertible(rng, n, max_cond=1e6):
    while True:
        a = random_complex(rng, n, n)
        if linalg.cond_estimate(a) < max_cond:
            return a


def random_basis(rng, n, max_cond=1e3):
    return Basis(random_invertible(rng, n, max_cond).T)


def random_linmap(rng, max_dim=5):
    m, n = rng.integers(1, max_dim + 1, size=2)
    r1, r2 = (rng.integers(0, min(m, n) + 1) for _ in range(2))
    return LinMap(random_rank_matrix(rng, m, n, r1), random_rank_matrix(rng, m, n, r2))


@pytest.fixture
def rng(request):
    return np.random.default_rng(zlib.crc32(request.node.name.encode()))


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number, name, ok, detail in sorted(ACCEPTANCE_RESULTS):
        status = "PASS" if ok else "FAIL"
        terminalreporter.write_line(f"[{status}] {number:>2}. {name}: {detail}")
