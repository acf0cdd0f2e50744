from __future__ import annotations

import pytest

from qgrass.quiver import a1, a_linear, d4_subspace, kronecker


@pytest.fixture
def A1():
    return a1()


@pytest.fixture
def A2():
    return a_linear(2)


@pytest.fixture
def A3():
    return a_linear(3)


@pytest.fixture
def D4():
    return d4_subspace()


@pytest.fixture
def K():
    return kronecker()


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance") or sys.modules.get("tests.test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for c in sorted(results, key=lambda c: c.number):
        terminalreporter.write_line(c.line())
        for f in c.failures[:5]:
            terminalreporter.write_line(f"    {f}")
