import itertools
from functools import lru_cache

from suzukihopf.algebra import AlgebraParams, SuzukiAlgebra
from suzukihopf.search import search_algebra

GRID = [
    AlgebraParams(N, n, mu, lam)
    for N, n, mu, lam in itertools.product((1, 2), (2, 3, 4, 5), (1, -1), (1, -1))
]


def grid_id(p):
    return f"N{p.N}n{p.n}{'+' if p.mu == 1 else '-'}{'+' if p.lam == 1 else '-'}"


@lru_cache(maxsize=None)
def algebra(N, n, mu=1, lam=1):
    return SuzukiAlgebra(AlgebraParams(N, n, mu, lam))


@lru_cache(maxsize=None)
def big_algebra(N, n, mu=1, lam=1):
    return search_algebra(AlgebraParams(N, n, mu, lam))


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance")
        for line in RESULTS:
            terminalreporter.write_line(line)
