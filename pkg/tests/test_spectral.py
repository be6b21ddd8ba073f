import math
import time

import numpy as np
import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from graphsmooth import families as F
from graphsmooth.graph import Graph, laplacian
from graphsmooth.spectral import (
    EigenConvergenceError,
    algebraic_connectivity,
    eig_symmetric,
    fiedler_vector,
    largest_laplacian_eigenvalue,
    spectral,
    spectral_bisection,
)

from .conftest import random_connected_graphs


def charpoly_roots(M):
    """Exact Laplacian spectrum from the characteristic polynomial."""
    lam = sympy.symbols("lam")
    poly = sympy.Matrix(M.tolist()).charpoly(lam)
    roots = sympy.Poly(poly.as_expr(), lam).all_roots()
    return sorted(float(r) for r in roots)


@pytest.mark.parametrize("G", [F.path(4), F.complete(4), F.cycle(5), F.star(5), F.cube()], ids=str)
def test_spectrum_matches_characteristic_polynomial(G):
    eig = eig_symmetric(laplacian(G))
    assert np.allclose(eig.eigenvalues, charpoly_roots(laplacian(G)), atol=1e-9)


def test_known_values():
    assert algebraic_connectivity(F.path(4)) == pytest.approx(2 - math.sqrt(2), abs=1e-9)
    assert algebraic_connectivity(F.path(2)) == pytest.approx(2.0, abs=1e-12)
    assert algebraic_connectivity(F.complete(5)) == pytest.approx(5.0, abs=1e-9)
    assert largest_laplacian_eigenvalue(F.star(6)) == pytest.approx(6.0, abs=1e-9)
    assert algebraic_connectivity(F.cycle(6)) == pytest.approx(1.0, abs=1e-9)


def test_eigensystem_of_k4():
    eig = eig_symmetric(laplacian(F.complete(4)))
    assert np.allclose(eig.eigenvalues, [0, 4, 4, 4], atol=1e-10)


def test_trace_identity():
    for G in random_connected_graphs(10, 2, 10, seed=3):
        eig = eig_symmetric(laplacian(G))
        assert eig.eigenvalues.sum() == pytest.approx(2 * G.m, abs=1e-8)


@settings(max_examples=40, deadline=None)
@given(arrays(np.float64, (6, 6), elements=st.floats(-10, 10)))
def test_random_symmetric_matrix(A):
    M = (A + A.T) / 2
    eig = eig_symmetric(M)
    Q = eig.eigenvectors
    assert np.all(np.diff(eig.eigenvalues) >= -1e-12)
    assert np.max(eig.residuals(M)) <= 1e-8 * max(1.0, np.abs(M).max())
    assert np.allclose(Q.T @ Q, np.eye(6), atol=1e-9)
    assert np.allclose(eig.eigenvalues, np.linalg.eigvalsh(M), atol=1e-8 * max(1.0, np.abs(M).max()))


def test_laplacian_residuals_and_orthogonality():
    for G in random_connected_graphs(20, 2, 14, seed=11):
        L = laplacian(G)
        eig = eig_symmetric(L)
        assert np.max(eig.residuals(L)) <= 1e-8
        assert np.allclose(eig.eigenvectors.T @ eig.eigenvectors, np.eye(G.n), atol=1e-9)
        assert eig.eigenvalues[0] == pytest.approx(0.0, abs=1e-9)


def test_input_validation():
    with pytest.raises(ValueError):
        eig_symmetric(np.zeros((2, 3)))
    with pytest.raises(ValueError):
        eig_symmetric(np.array([[0.0, 1.0], [2.0, 0.0]]))
    with pytest.raises(EigenConvergenceError):
        eig_symmetric(laplacian(F.path(6)), max_sweeps=0)
    with pytest.raises(ValueError):
        fiedler_vector(Graph(3, [(0, 1)]))


def test_fiedler_vector_properties():
    for G in random_connected_graphs(20, 2, 12, seed=5):
        sp = spectral(G)
        x = sp.fiedler.as_array()
        L = laplacian(G)
        assert abs(x.sum()) <= 1e-9
        assert np.linalg.norm(x) == pytest.approx(1.0, abs=1e-12)
        assert x @ L @ x == pytest.approx(sp.a, abs=1e-8)
        first = x[np.abs(x) > 1e-9][0]
        assert first > 0
        assert sp.fiedler.objective == pytest.approx(sp.a)


def test_rayleigh_quotient_lower_bound():
    rng = np.random.default_rng(0)
    for G in random_connected_graphs(10, 3, 10, seed=6):
        a = algebraic_connectivity(G)
        L = laplacian(G)
        for _ in range(20):
            x = rng.normal(size=G.n)
            x -= x.mean()
            x /= np.linalg.norm(x)
            assert x @ L @ x >= a - 1e-9


def test_bisection_path():
    S = spectral_bisection(F.path(4))
    assert S in ({0, 1}, {2, 3})
    assert spectral_bisection(F.path(4)) == S


def test_bisection_is_proper():
    for G in random_connected_graphs(20, 2, 12, seed=9):
        S = spectral_bisection(G)
        assert 0 < len(S) < G.n


def test_runtime_per_graph():
    G = F.complete(26)
    t0 = time.perf_counter()
    spectral(G)
    assert time.perf_counter() - t0 < 1.0
