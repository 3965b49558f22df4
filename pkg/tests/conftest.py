import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))

from ramsey_witness.catalog import connected_graph6, connected_graphs  # noqa: E402


@pytest.fixture(scope="session")
def catalog7():
    return list(connected_graphs(7))


@pytest.fixture(scope="session")
def catalog6():
    return list(connected_graphs(6))


@pytest.fixture(scope="session")
def catalog8_file(tmp_path_factory):
    path = tmp_path_factory.mktemp("catalog") / "connected_1_8.g6"
    path.write_text("\n".join(connected_graph6()) + "\n")
    return str(path)


def pytest_terminal_summary(terminalreporter):
    acceptance = sys.modules.get("test_acceptance")
    if acceptance is not None and acceptance.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in acceptance.RESULTS:
            terminalreporter.write_line(line)
