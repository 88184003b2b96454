import pytest

from eccspec.generators import all_connected_graphs

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture(scope="session")
def graphs_upto7():
    return [g for n in range(1, 8) for g in all_connected_graphs(n)]


@pytest.fixture(scope="session")
def graphs_upto5():
    return [g for n in range(1, 6) for g in all_connected_graphs(n)]


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
