from fractions import Fraction

import pytest

from graphsmooth import families as F
from graphsmooth.bounds import bounds_report, isoperimetric, mohar_holds_everywhere, xi_min
from graphsmooth.graph import Graph
from graphsmooth.l1 import CapExceeded
from graphsmooth.mincut import min_cut
from graphsmooth.spectral import spectral

from .conftest import random_connected_graphs

Q = Fraction


def test_xi_examples():
    assert isoperimetric(F.cycle(6)) == Q(2, 3)
    assert xi_min(F.star(5)) == Q(1, 4)
    assert isoperimetric(F.complete(4)) == 2
    assert min_cut(F.complete(4))[0] == 3
    with pytest.raises(CapExceeded):
        xi_min(F.path(21))


def test_xi_min_vs_isoperimetric():
    # the unrestricted minimum can only be smaller
    for G in random_connected_graphs(20, 2, 10, seed=4):
        assert xi_min(G) <= isoperimetric(G)
    assert xi_min(F.star(5)) < isoperimetric(F.star(5))


def test_complete_graph_tight_lower_bound():
    for n in range(3, 11):
        rep = bounds_report(F.complete(n))
        r = rep.record("l2_lower")
        assert r.lhs == pytest.approx(float(rep.b), abs=1e-7) and r.holds


def test_p4_record():
    rep = bounds_report(F.path(4))
    r = rep.record("sqrt_ma_upper")
    assert r.lhs == Q(1, 2) and r.rhs == pytest.approx(1.3256, abs=1e-3)
    assert rep.all_hold


def test_star_degree_bound_tight():
    rep = bounds_report(F.star(5))
    r = rep.record("degree_upper")
    assert r.lhs == r.rhs == Q(5, 8) and r.holds and r.slack == 0


def test_single_edge_skips_cheeger():
    rep = bounds_report(F.path(2))
    assert "cheeger_upper" not in [r.name for r in rep.records]
    assert any("cheeger" in note for note in rep.notes)
    assert rep.all_hold


def test_every_record_on_random_graphs():
    for G in random_connected_graphs(60, 2, 12, seed=10):
        rep = bounds_report(G)
        assert rep.all_hold, [r for r in rep.records if not r.holds]
        for r in rep.records:
            assert r.slack == pytest.approx(float(r.rhs) - float(r.lhs))


def test_mohar_for_every_subset():
    for G in random_connected_graphs(30, 2, 10, seed=14):
        sp = spectral(G)
        assert mohar_holds_everywhere(G, sp.a, sp.lambda_max)


def test_partial_report_above_cap():
    rep = bounds_report(F.cycle(16), cap=12)
    assert rep.b is None
    statuses = {r.name: r.status for r in rep.records}
    assert statuses["l2_upper"] == statuses["sqrt_ma_upper"] == "partial"
    # 16/15 from the min-cut witness is far above b(C16) = 1/4
    assert statuses["cheeger_upper"] == "inconclusive"
    assert "l2_lower" not in statuses and "xi_lower" not in statuses
    assert rep.all_hold


def test_disconnected_rejected():
    with pytest.raises(ValueError):
        bounds_report(Graph(4, [(0, 1), (2, 3)]))
