"""Dense symmetric eigensolver (cyclic Jacobi) and Laplacian spectral quantities."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .graph import Graph, is_connected, laplacian
from .vectors import Regime, SmoothingVector

DEFAULT_TOL = 1e-10
MAX_SWEEPS = 100


class EigenConvergenceError(RuntimeError):
    pass


@dataclass(frozen=True, eq=False)
class EigenDecomposition:
    """Ascending eigenvalues; ``eigenvectors[:, i]`` pairs with ``eigenvalues[i]``."""

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray
    sweeps: int

    def residuals(self, M: np.ndarray) -> np.ndarray:
        M = np.asarray(M, dtype=float)
        R = M @ self.eigenvectors - self.eigenvectors * self.eigenvalues
        return np.linalg.norm(R, axis=0)


@dataclass(frozen=True, eq=False)
class SpectralResult:
    a: float
    lambda_max: float
    fiedler: SmoothingVector
    bisection: frozenset[int]
    eigen: EigenDecomposition


def _off_norm(A: np.ndarray) -> float:
    off = A - np.diag(np.diag(A))
    return float(np.linalg.norm(off))


def eig_symmetric(M, tol: float = DEFAULT_TOL, max_sweeps: int = MAX_SWEEPS) -> EigenDecomposition:
    """Full eigendecomposition of a real symmetric matrix by cyclic Jacobi rotations.

    Sweeps over all ``(p, q)`` pairs in row order until the Frobenius norm of
    the off-diagonal part drops below ``tol``.
    """
    A = np.array(M, dtype=float, copy=True)
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise ValueError("matrix must be square")
    if A.size and np.max(np.abs(A - A.T)) > tol:
        raise ValueError("matrix is not symmetric")
    A = (A + A.T) / 2
    n = A.shape[0]
    V = np.eye(n)

    sweeps = 0
    while _off_norm(A) >= tol:
        if sweeps >= max_sweeps:
            raise EigenConvergenceError(
                f"Jacobi did not converge in {max_sweeps} sweeps (off-diagonal {_off_norm(A):.3e})"
            )
        sweeps += 1
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = A[p, q]
                if apq == 0.0:
                    continue
                theta = (A[q, q] - A[p, p]) / (2.0 * apq)
                if abs(theta) > 1e150:
                    t = 0.5 / theta  # theta^2 would overflow
                else:
                    t = np.copysign(1.0, theta) / (abs(theta) + np.sqrt(theta * theta + 1.0))
                c = 1.0 / np.sqrt(t * t + 1.0)
                s = t * c
                col_p = A[:, p].copy()
                col_q = A[:, q].copy()
                A[:, p] = c * col_p - s * col_q
                A[:, q] = s * col_p + c * col_q
                row_p = A[p, :].copy()
                row_q = A[q, :].copy()
                A[p, :] = c * row_p - s * row_q
                A[q, :] = s * row_p + c * row_q
                A[p, q] = A[q, p] = 0.0
                vp = V[:, p].copy()
                vq = V[:, q].copy()
                V[:, p] = c * vp - s * vq
                V[:, q] = s * vp + c * vq

    w = np.diag(A).copy()
    order = np.argsort(w, kind="stable")
    return EigenDecomposition(w[order], V[:, order], sweeps)


def laplacian_eigen(G: Graph, tol: float = DEFAULT_TOL) -> EigenDecomposition:
    return eig_symmetric(laplacian(G), tol=tol)


def algebraic_connectivity(G: Graph, tol: float = DEFAULT_TOL) -> float:
    if G.n < 2:
        raise ValueError("algebraic connectivity needs at least two vertices")
    return float(laplacian_eigen(G, tol).eigenvalues[1])


def largest_laplacian_eigenvalue(G: Graph, tol: float = DEFAULT_TOL) -> float:
    if G.n < 1:
        raise ValueError("empty graph")
    return float(laplacian_eigen(G, tol).eigenvalues[-1])


def _fiedler_from(G: Graph, eig: EigenDecomposition, zero_tol: float) -> SmoothingVector:
    x = eig.eigenvectors[:, 1].copy()
    # strip the tiny all-ones component left by rounding, then renormalise
    x -= x.mean()
    x /= np.linalg.norm(x)
    nz = np.flatnonzero(np.abs(x) > zero_tol)
    if nz.size and x[nz[0]] < 0:
        x = -x
    L = laplacian(G)
    return SmoothingVector(x, Regime.L2, float(x @ L @ x))


def fiedler_vector(G: Graph, tol: float = DEFAULT_TOL, zero_tol: float = 1e-9) -> SmoothingVector:
    """Unit Fiedler vector, sign-normalised so its first nonzero entry is positive.

    When ``a(G)`` is a repeated eigenvalue any vector of the eigenspace is a
    valid answer; the one returned is whatever Jacobi produced.
    """
    if G.n < 2 or not is_connected(G):
        raise ValueError("Fiedler vector requires a connected graph with n >= 2")
    return _fiedler_from(G, laplacian_eigen(G, tol), zero_tol)


def _bisect(x: np.ndarray, zero_tol: float) -> frozenset[int]:
    if np.all(np.abs(x) <= zero_tol):
        raise ValueError("degenerate Fiedler vector: every component is zero")
    side = frozenset(int(v) for v in np.flatnonzero(x > -zero_tol))
    if len(side) == len(x):
        raise ValueError("degenerate Fiedler vector: no negative component")
    return side


def spectral_bisection(G: Graph, tol: float = DEFAULT_TOL, zero_tol: float = 1e-9) -> frozenset[int]:
    """Vertices with positive Fiedler entries; near-zero entries join that side."""
    return _bisect(fiedler_vector(G, tol, zero_tol).as_array(), zero_tol)


def spectral(G: Graph, tol: float = DEFAULT_TOL, zero_tol: float = 1e-9) -> SpectralResult:
    """Compute a(G), the largest eigenvalue, a Fiedler vector and its sign split at once."""
    if G.n < 2 or not is_connected(G):
        raise ValueError("spectral analysis requires a connected graph with n >= 2")
    eig = laplacian_eigen(G, tol)
    fv = _fiedler_from(G, eig, zero_tol)
    return SpectralResult(
        a=float(eig.eigenvalues[1]),
        lambda_max=float(eig.eigenvalues[-1]),
        fiedler=fv,
        bisection=_bisect(fv.as_array(), zero_tol),
        eigen=eig,
    )


__all__ = [
    "EigenConvergenceError",
    "EigenDecomposition",
    "SpectralResult",
    "eig_symmetric",
    "laplacian_eigen",
    "algebraic_connectivity",
    "largest_laplacian_eigenvalue",
    "fiedler_vector",
    "spectral_bisection",
    "spectral",
]
