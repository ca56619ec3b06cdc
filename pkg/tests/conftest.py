import sys
from itertools import combinations
from pathlib import Path

import pytest
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from seidelnull.graph import Graph, VertexSet  # noqa: E402


@st.composite
def graphs(draw, min_n=1, max_n=9):
    n = draw(st.integers(min_n, max_n))
    pairs = list(combinations(range(n), 2))
    mask = draw(st.integers(0, (1 << len(pairs)) - 1))
    return Graph.from_edges(n, [pairs[b] for b in range(len(pairs)) if mask >> b & 1])


@st.composite
def graph_and_set(draw, min_n=1, max_n=9):
    g = draw(graphs(min_n, max_n))
    mask = draw(st.integers(0, (1 << g.n) - 1))
    return g, VertexSet(g.n, mask)


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture
def acceptance_line():
    def record(number, name, ok, elapsed):
        line = f"[{'PASS' if ok else 'FAIL'}] criterion {number:>2}: {name} ({elapsed * 1000:.1f} ms)"
        ACCEPTANCE_LINES.append(line)
        print(line)
    return record
