import pytest

from doublearb.graph import Graph, load_graph, star_graph, wheel_graph

TWINS6_TEXT = "6\n2 0\n2 1\n0 1\n0 4\n0 5\n1 5\n1 4\n4 5\n4 3\n5 3"
# 1-based labels 1..6 map to ids 0..5
TWINS6_LABEL = {1: 0, 2: 1, 3: 2, 4: 3, 5: 4, 6: 5}


@pytest.fixture
def twins6() -> Graph:
    return load_graph(TWINS6_TEXT)


@pytest.fixture
def w4() -> Graph:
    # rim a1=0, a2=1, b1=2, b2=3 in cyclic order, hub a=4
    return wheel_graph(4)


@pytest.fixture
def k13() -> Graph:
    return star_graph(3)


ACCEPTANCE_LINES: list[str] = []


def record(number: int, ok: bool, detail: str) -> str:
    line = f"criterion {number}: {'PASS' if ok else 'FAIL'} ({detail})"
    ACCEPTANCE_LINES.append(line)
    print(line)
    return line


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
