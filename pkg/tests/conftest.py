from __future__ import annotations

import sys

import pytest

from alcovekit.rootdata import build_root_datum


@pytest.fixture(params=["A1", "A2", "B2"])
def rd(request):
    return build_root_datum(request.param)


@pytest.fixture
def a1():
    return build_root_datum("A1")


@pytest.fixture
def a2():
    return build_root_datum("A2")


@pytest.fixture
def b2():
    return build_root_datum("B2")


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance") or sys.modules.get("tests.test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if results:
        terminalreporter.section("acceptance criteria")
        for n in sorted(results):
            terminalreporter.write_line(results[n])
