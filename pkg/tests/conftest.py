import itertools

import networkx as nx
import numpy as np
import pytest

from graphsmooth.families import random_connected_graph, random_tree
from graphsmooth.graph import Graph


def all_trees(n_max: int):
    """Every unlabeled tree with 2..n_max vertices (one labeling each)."""
    for n in range(2, n_max + 1):
        for T in nx.nonisomorphic_trees(n):
            yield Graph(n, T.edges())


def random_connected_graphs(count: int, n_lo: int, n_hi: int, seed: int):
    rng = np.random.default_rng(seed)
    for _ in range(count):
        n = int(rng.integers(n_lo, n_hi + 1))
        yield random_connected_graph(n, rng, p=float(rng.uniform(0.05, 0.7)))


def random_trees(count: int, n_lo: int, n_hi: int, seed: int):
    rng = np.random.default_rng(seed)
    for _ in range(count):
        yield random_tree(int(rng.integers(n_lo, n_hi + 1)), rng)


def proper_subsets(n: int):
    for r in range(1, n):
        yield from itertools.combinations(range(n), r)


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


_acceptance = {}


def pytest_runtest_logreport(report):
    if "test_acceptance.py::" not in report.nodeid:
        return
    if report.when == "call" or report.outcome != "passed":
        prev = _acceptance.get(report.nodeid)
        if prev is None or prev == "PASS":
            _acceptance[report.nodeid] = "PASS" if report.outcome == "passed" else "FAIL"


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for nodeid, verdict in _acceptance.items():
        name = nodeid.split("::")[-1]
        terminalreporter.write_line(f"{verdict}  {name}")
