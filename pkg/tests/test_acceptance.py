"""Acceptance criteria 1-9; the PASS/FAIL line of each is echoed in the terminal summary."""

from __future__ import annotations

import pytest

from qgrass.verify import CRITERIA, run_criterion

RESULTS: list = []


@pytest.mark.parametrize("number", sorted(CRITERIA))
def test_criterion(number):
    c = run_criterion(number)
    RESULTS.append(c)
    print(c.line())
    assert c.passed, "\n".join(c.failures[:20])
