from __future__ import annotations

import pytest

from postalg.butcher import FinitePregroup


@pytest.fixture(scope="session")
def t9():
    """The 9-element Butcher pre-group over F_3, trees up to 2 nodes."""
    return FinitePregroup(3, 2).to_table()


@pytest.fixture(scope="session")
def t81():
    return FinitePregroup(3, 3).to_table()


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import RESULTS

    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
