from itertools import combinations

import pytest

from graphsmooth import families as F
from graphsmooth.graph import Graph, boundary_size
from graphsmooth.mincut import min_cut

from .conftest import random_connected_graphs, random_trees


def brute_mc(G):
    return min(boundary_size(G, S) for r in range(1, G.n) for S in combinations(range(G.n), r))


def test_examples():
    assert min_cut(F.cycle(6))[0] == 2
    assert min_cut(F.complete(4))[0] == 3
    assert min_cut(F.path(2))[0] == 1


def test_trees_have_unit_min_cut():
    for T in random_trees(20, 2, 15, seed=1):
        mc, S = min_cut(T)
        assert mc == 1 and boundary_size(T, S) == 1


def test_matches_brute_force():
    for G in random_connected_graphs(80, 2, 10, seed=77):
        mc, S = min_cut(G)
        assert 0 < len(S) < G.n
        assert boundary_size(G, S) == mc == brute_mc(G)


def test_errors():
    with pytest.raises(ValueError):
        min_cut(Graph(1))
    with pytest.raises(ValueError):
        min_cut(Graph(3, [(0, 1)]))
