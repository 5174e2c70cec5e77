from __future__ import annotations

import pytest

import acceptance_log
from weylcrest.rootsys import root_system


def pytest_terminal_summary(terminalreporter):
    if not acceptance_log.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in acceptance_log.summary_lines():
        terminalreporter.write_line(line)


@pytest.fixture
def A2():
    return root_system("A", 2)


@pytest.fixture
def A3():
    return root_system("A", 3)
