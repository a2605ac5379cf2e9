import sys

import pytest

from diffpoly import heisenberg_algebra, inner_derivation


@pytest.fixture
def H():
    return heisenberg_algebra()


@pytest.fixture
def huvw(H):
    return H.basis()


@pytest.fixture
def d_u(H):
    return inner_derivation(H.basis_element("u"))


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance") or sys.modules.get("tests.test_acceptance")
    lines = getattr(module, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
