"""Acceptance suite: one test per built-in check, one status line each."""

import pytest

from crjets import checks


@pytest.mark.parametrize("fn", checks.ALL_CHECKS,
                         ids=[fn.__name__ for fn in checks.ALL_CHECKS])
def test_acceptance(fn, capsys):
    result = fn()
    with capsys.disabled():
        status = "PASS" if result.passed else "FAIL"
        print("%s %s: %s" % (status, result.name, result.detail))
    assert result.passed, "%s: %s" % (result.name, result.detail)
