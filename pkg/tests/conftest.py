import itertools

import pytest
from hypothesis import strategies as st

from kodag.digraph import Digraph

SEQUENCES = ["fib", "const:1", "const:3", "nat"]

_acceptance_lines: list[str] = []


@pytest.fixture
def acceptance_log():
    """Record one PASS/FAIL line per acceptance criterion."""

    def log(criterion: str, ok: bool, detail: str = ""):
        line = f"[{'PASS' if ok else 'FAIL'}] {criterion}" + (f" -- {detail}" if detail else "")
        _acceptance_lines.append(line)
        print(line)
        return ok

    return log


def pytest_terminal_summary(terminalreporter):
    if _acceptance_lines:
        terminalreporter.section("acceptance criteria")
        for line in _acceptance_lines:
            terminalreporter.write_line(line)


@st.composite
def dags(draw, max_vertices=8):
    """Random DAG: arcs forward in index order, then vertices shuffled."""
    n = draw(st.integers(0, max_vertices))
    pairs = list(itertools.combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    perm = draw(st.permutations(range(n)))
    return Digraph(n, frozenset((perm[u], perm[v]) for u, v in chosen))


@st.composite
def chain_pairs(draw, max_vertices=9):
    n = draw(st.integers(0, max_vertices))
    return tuple(draw(st.permutations(range(n)))), tuple(draw(st.permutations(range(n))))
