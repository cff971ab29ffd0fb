"""Acceptance criteria 1-8; run with ``-s`` to see one PASS/FAIL line each."""
import pytest

from weylorbit.acceptance import CRITERIA, run_criterion


@pytest.mark.parametrize("number", [n for n, _, _ in CRITERIA],
                         ids=[f"criterion_{n}_{name.replace(' ', '_')}" for n, name, _ in CRITERIA])
def test_criterion(number):
    result = run_criterion(number)
    print("\n" + result.line())
    assert result.passed, result.detail
