"""The thirteen acceptance criteria, one test each, at their stated tolerances.

Each test prints a PASS/FAIL line; the lines are repeated in the pytest
terminal summary.
"""

import pytest

from rydberg_renyi.acceptance import CHECKS, run_checks

RESULT_LINES = []


@pytest.mark.parametrize("number", [c[0] for c in CHECKS], ids=[f"criterion_{c[0]:02d}" for c in CHECKS])
def test_criterion(number):
    (result,) = run_checks(only={number})
    RESULT_LINES.append(result.line())
    print(result.line())
    assert result.passed, result.detail
