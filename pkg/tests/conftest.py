import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from graphlet_match import motivating  # noqa: E402

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture(scope="session")
def data():
    return motivating.data_graph()


@pytest.fixture(scope="session")
def query():
    return motivating.query_graph()


@pytest.fixture
def fixture_dir():
    return Path(str(motivating.fixture_path("data.edges"))).parent


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
