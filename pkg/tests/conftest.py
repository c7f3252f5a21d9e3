import pytest

from hkmonoid.digraph import Digraph, cycle_graph, example_s4

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def c3():
    return cycle_graph(3)


@pytest.fixture
def c4():
    return cycle_graph(4)


@pytest.fixture
def s4():
    return example_s4()


def two_triangles() -> Digraph:
    """Triangles 1->2->3->1 and 4->5->6->4 joined by the arrow 3->4."""
    return Digraph(6, frozenset({(1, 2), (2, 3), (3, 1), (4, 5), (5, 6), (6, 4), (3, 4)}))


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
