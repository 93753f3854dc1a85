"""Eigenvalues, eigenspaces, and eigenvector centrality of adjacency matrices.

The symmetric solver is a cyclic Jacobi iteration: simple, numerically
robust, and orthogonal by construction, which is all that is needed at the
few-hundred-vertex scale this package targets. The Perron pair is computed
by power iteration on the shifted matrix A + n*I, which is primitive for any
(strongly) connected graph, so it also covers directed graphs where only the
largest eigenvalue is meaningful.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

import numpy as np

_JACOBI_OFFDIAG_TOL = 1e-12
_POWER_STEP_TOL = 1e-12


class ConvergenceError(RuntimeError):
    """An iterative solver failed to reach its tolerance."""


def _require_symmetric(a: np.ndarray) -> np.ndarray:
    a = np.asarray(a, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    if not np.array_equal(a, a.T):
        raise ValueError("matrix is not symmetric")
    return a


def _fix_signs(vecs: np.ndarray) -> np.ndarray:
    """Flip each column so its largest-magnitude entry (first on ties) is positive."""
    out = vecs.copy()
    for j in range(out.shape[1]):
        lead = out[np.argmax(np.abs(out[:, j])), j]
        if lead < 0:
            out[:, j] = -out[:, j]
    return out


def eig_symmetric(a: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """All eigenpairs of a symmetric matrix via cyclic Jacobi rotations.

    Returns (eigenvalues, eigenvectors) with eigenvalues ascending and
    eigenvectors as orthonormal columns, each flipped so its
    largest-magnitude entry is positive (ties broken by lowest index).
    """
    a = _require_symmetric(a)
    n = a.shape[0]
    d = a.copy()
    v = np.eye(n)
    for _ in range(100):
        off = np.abs(d - np.diag(np.diag(d))).max() if n > 1 else 0.0
        if off <= _JACOBI_OFFDIAG_TOL:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = d[p, q]
                if abs(apq) <= _JACOBI_OFFDIAG_TOL:
                    continue
                tau = (d[q, q] - d[p, p]) / (2.0 * apq)
                if tau >= 0.0:
                    t = 1.0 / (tau + np.sqrt(1.0 + tau * tau))
                else:
                    t = -1.0 / (-tau + np.sqrt(1.0 + tau * tau))
                c = 1.0 / np.sqrt(1.0 + t * t)
                s = t * c
                rot_p = c * d[:, p] - s * d[:, q]
                rot_q = s * d[:, p] + c * d[:, q]
                d[:, p], d[:, q] = rot_p, rot_q
                d[p, :], d[q, :] = c * d[p, :] - s * d[q, :], s * d[p, :] + c * d[q, :]
                d[p, q] = d[q, p] = 0.0
                vp = c * v[:, p] - s * v[:, q]
                vq = s * v[:, p] + c * v[:, q]
                v[:, p], v[:, q] = vp, vq
    else:
        raise ConvergenceError("Jacobi sweeps did not reduce off-diagonal mass")
    w = np.diag(d).copy()
    order = np.argsort(w, kind="stable")
    return w[order], _fix_signs(v[:, order])


def _is_connected_matrix(a: np.ndarray, strong: bool) -> bool:
    n = a.shape[0]

    def reach(m):
        seen = np.zeros(n, dtype=bool)
        seen[0] = True
        queue = deque([0])
        while queue:
            i = queue.popleft()
            for k in np.flatnonzero(m[i]):
                if not seen[k]:
                    seen[k] = True
                    queue.append(k)
        return seen.all()

    if strong:
        return bool(reach(a) and reach(a.T))
    return bool(reach(np.maximum(a, a.T)))


def _power_iteration(m: np.ndarray, max_iter: int = 500_000) -> np.ndarray:
    n = m.shape[0]
    x = np.full(n, 1.0 / np.sqrt(n))
    for _ in range(max_iter):
        y = m @ x
        y /= np.linalg.norm(y)
        if np.abs(y - x).max() < _POWER_STEP_TOL:
            return y
        x = y
    raise ConvergenceError("power iteration did not converge")


def perron(a: np.ndarray) -> tuple[float, np.ndarray, np.ndarray]:
    """Perron eigenvalue with positive unit-norm right and left eigenvectors.

    Power iteration runs on the shift A + n*I, whose positive diagonal makes
    it primitive whenever the graph is (strongly) connected; the shift is
    subtracted from the converged Rayleigh quotient. Raises ValueError when
    the graph is not (strongly) connected, since positivity is then lost.
    """
    a = np.asarray(a, dtype=float)
    n = a.shape[0]
    symmetric = np.array_equal(a, a.T)
    if not _is_connected_matrix(a, strong=not symmetric):
        kind = "connected" if symmetric else "strongly connected"
        raise ValueError(f"Perron pair requires a {kind} graph")
    shifted = a + n * np.eye(n)
    right = _power_iteration(shifted)
    left = right if symmetric else _power_iteration(shifted.T)
    lam = float(right @ a @ right)
    return lam, right, left


def centrality(a: np.ndarray) -> np.ndarray:
    """Eigenvector centrality: the positive unit-norm left Perron eigenvector."""
    return perron(a)[2]


def default_group_tol(eigenvalues: np.ndarray) -> float:
    """Eigenvalue grouping tolerance: 1e-8 relative to the spectral radius."""
    scale = float(np.abs(eigenvalues).max()) if len(eigenvalues) else 1.0
    return 1e-8 * max(1.0, scale)


def eigenspace(a: np.ndarray, lam: float, group_tol: float | None = None) -> np.ndarray:
    """Orthonormal basis of the span of eigenvectors with eigenvalue near lam.

    Eigenvalues within group_tol of lam are grouped together; the result has
    one column per grouped eigenvalue and zero columns when none is close.
    """
    w, vecs = eig_symmetric(a)
    tol = default_group_tol(w) if group_tol is None else group_tol
    mask = np.abs(w - lam) <= tol
    return vecs[:, mask]


@dataclass(frozen=True, eq=False)
class SpectralSummary:
    """Extreme eigenvalues, their eigenspaces, and centrality for one matrix."""

    eigenvalues: np.ndarray
    lambda_max: float
    lambda_min: float
    mult_min: int
    basis_max: np.ndarray
    basis_min: np.ndarray
    centrality: np.ndarray

    @property
    def mult_max(self) -> int:
        return self.basis_max.shape[1]


def spectral_summary(a: np.ndarray, group_tol: float | None = None) -> SpectralSummary:
    """Full spectral report for a symmetric adjacency matrix of a connected graph."""
    a = _require_symmetric(a)
    w, vecs = eig_symmetric(a)
    tol = default_group_tol(w) if group_tol is None else group_tol
    lam_min, lam_max = float(w[0]), float(w[-1])
    min_mask = np.abs(w - lam_min) <= tol
    max_mask = np.abs(w - lam_max) <= tol
    return SpectralSummary(
        eigenvalues=w,
        lambda_max=lam_max,
        lambda_min=lam_min,
        mult_min=int(min_mask.sum()),
        basis_max=vecs[:, max_mask],
        basis_min=vecs[:, min_mask],
        centrality=centrality(a),
    )
