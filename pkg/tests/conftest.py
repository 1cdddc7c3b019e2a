import re
from functools import lru_cache

import pytest

from taftpiv.classifier import valid_parameter_tuples
from taftpiv.hopf import make_gen_taft, make_taft
from taftpiv.pivotal import accepted_pairs

_acceptance: dict[int, tuple[str, str]] = {}


@lru_cache(maxsize=None)
def small_algebras(max_N: int = 6, taft: bool = False):
    """Every valid generalized Taft algebra with 2 <= N <= max_N (and optionally Taft(N))."""
    out = [make_gen_taft(N, *map(int, t)) for N in range(2, max_N + 1) for t in valid_parameter_tuples(N)]
    if taft:
        out += [make_taft(N) for N in range(2, max_N + 1)]
    return tuple(out)


@lru_cache(maxsize=None)
def oracle_sweep(convention):
    """Module-oracle accepted pairs for every valid algebra with N <= 6; shared across test files."""
    return {H: accepted_pairs(H, convention) for H in small_algebras(6)}


@pytest.fixture(scope="session")
def algebras_n6():
    return small_algebras(6)


def pytest_runtest_logreport(report):
    if report.when != "call" or "test_acceptance.py" not in report.nodeid:
        return
    m = re.search(r"test_criterion_(\d+)_(\w+)", report.nodeid)
    if m:
        _acceptance[int(m.group(1))] = (m.group(2), "PASS" if report.passed else "FAIL")


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(_acceptance):
        name, status = _acceptance[k]
        terminalreporter.write_line(f"criterion {k:2d} {status}  {name}")
