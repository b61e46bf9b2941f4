import functools

import numpy as np
import pytest

from kuniform import Graph

SINGLE = {
    "I": np.eye(2, dtype=complex),
    "X": np.array([[0, 1], [1, 0]], dtype=complex),
    "Y": np.array([[0, -1j], [1j, 0]], dtype=complex),
    "Z": np.array([[1, 0], [0, -1]], dtype=complex),
}
COEFF = {"+": 1, "-": -1, "+i": 1j, "-i": -1j}


def word_matrix(text):
    """Explicit Kronecker-product matrix of a signed Pauli string."""
    for sign in ("+i", "-i", "+", "-"):
        if text.startswith(sign):
            body = text[len(sign):]
            break
    else:
        sign, body = "+", text
    return COEFF[sign] * functools.reduce(np.kron, [SINGLE[c] for c in body])


def random_graph(rng, n, p=0.5):
    edges = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p]
    return Graph.from_edges(n, edges)


@pytest.fixture
def fig1():
    # figure labels 1..4 shifted to 0-based: edges 1-2, 2-3, 2-4
    return Graph.from_edges(4, [(0, 1), (1, 2), (1, 3)])


ACCEPTANCE_RESULTS = []


def pytest_runtest_logreport(report):
    if report.when == "call" and "test_acceptance.py" in report.nodeid:
        name = report.nodeid.split("::")[-1]
        ACCEPTANCE_RESULTS.append((name, report.passed, report.duration))


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name, ok, secs in ACCEPTANCE_RESULTS:
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {name}  ({secs:.2f}s)")
