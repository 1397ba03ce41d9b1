import pytest
from hypothesis import settings

from vermins import fixtures

settings.register_profile("default", max_examples=200, deadline=None)
settings.load_profile("default")


@pytest.fixture
def paper():
    return fixtures.paper_network()


@pytest.fixture
def backtracking():
    return fixtures.backtracking_network()


@pytest.fixture
def triangle():
    return fixtures.triangle_network()


@pytest.fixture
def two_node():
    return fixtures.two_node_network()


def pytest_terminal_summary(terminalreporter):
    lines = []
    for outcome in ("passed", "failed"):
        for rep in terminalreporter.stats.get(outcome, []):
            if "test_acceptance.py" in rep.nodeid and rep.when == "call":
                lines.append((rep.nodeid.split("::")[-1], outcome.upper()))
    if lines:
        terminalreporter.section("acceptance criteria")
        for name, outcome in sorted(lines):
            terminalreporter.write_line(f"{'PASS' if outcome == 'PASSED' else 'FAIL'}  {name}")
