"""
First Dirichlet eigenpair of a graph with boundary.

The Dirichlet problem only involves the interior vertices: since f vanishes
on the boundary, it reduces to the principal submatrix of L = D - A indexed
by the interior. Degrees on the diagonal are full-graph degrees.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence

import numpy as np
import scipy.linalg

__all__ = [
    "EigenPair",
    "ConvergenceError",
    "dirichlet_laplacian",
    "jacobi_eigh",
    "first_eigenpair",
    "full_spectrum",
    "rayleigh_quotient",
    "tridiagonalize",
    "sturm_count",
]

DEFAULT_TOL = 1e-10
MAX_SWEEPS = 10_000
SIMPLE_GAP = 1e-9


class ConvergenceError(RuntimeError):
    pass


@dataclass(frozen=True, eq=False)
class EigenPair:
    """First Dirichlet eigenvalue ``lam`` and eigenfunction ``f``.

    ``f`` is indexed by vertex id, is zero on the boundary, positive on the
    interior and has unit Euclidean norm.
    """

    lam: float
    f: np.ndarray

    def __iter__(self):
        return iter((self.lam, self.f))


def dirichlet_laplacian(g) -> np.ndarray:
    """Reduced Laplacian, rows/columns ordered as ``g.interior``."""
    interior = g.interior
    index = {v: i for i, v in enumerate(interior)}
    m = np.diag(np.array([g.degree(v) for v in interior], dtype=float))
    for u, v in g.edges:
        if u in index and v in index:
            m[index[u], index[v]] = m[index[v], index[u]] = -1.0
    return m


def jacobi_eigh(a, tol: float = DEFAULT_TOL, max_sweeps: int = MAX_SWEEPS):
    """Eigen-decomposition of a real symmetric matrix by cyclic Jacobi rotations.

    Returns ``(w, v)`` with eigenvalues ascending and eigenvectors in the
    columns of ``v``. Iterates until the off-diagonal Frobenius norm drops
    below ``tol``.
    """
    a = np.array(a, dtype=float)
    n = a.shape[0]
    if a.shape != (n, n):
        raise ValueError("matrix must be square")
    if not np.allclose(a, a.T):
        raise ValueError("matrix must be symmetric")
    v = np.eye(n)
    for _ in range(max_sweeps):
        off = np.sqrt(2.0 * np.sum(np.triu(a, 1) ** 2))
        if off <= tol:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if abs(apq) < 1e-300:
                    continue
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                t = np.copysign(1.0, theta) / (abs(theta) + np.hypot(theta, 1.0))
                c = 1.0 / np.hypot(t, 1.0)
                s = t * c
                ap, aq = a[:, p].copy(), a[:, q].copy()
                a[:, p] = c * ap - s * aq
                a[:, q] = s * ap + c * aq
                ap, aq = a[p, :].copy(), a[q, :].copy()
                a[p, :] = c * ap - s * aq
                a[q, :] = s * ap + c * aq
                a[p, q] = a[q, p] = 0.0
                vp, vq = v[:, p].copy(), v[:, q].copy()
                v[:, p] = c * vp - s * vq
                v[:, q] = s * vp + c * vq
    else:
        raise ConvergenceError(f"Jacobi iteration did not converge in {max_sweeps} sweeps")
    w = np.diag(a).copy()
    order = np.argsort(w, kind="stable")
    return w[order], v[:, order]


def _eigh(m, tol, method):
    if method == "jacobi":
        return jacobi_eigh(m, tol=tol)
    if method == "lapack":
        return np.linalg.eigh(m)
    raise ValueError(f"unknown method {method!r}")


def first_eigenpair(g, tol: float = DEFAULT_TOL, method: str = "jacobi") -> EigenPair:
    """Smallest Dirichlet eigenvalue and its positive unit eigenfunction.

    Args:
        g: graph with boundary (``BoundaryGraph`` or ``RootedTree``).
        tol: off-diagonal tolerance of the Jacobi iteration.
        method: ``"jacobi"`` (default) or ``"lapack"`` (``numpy.linalg.eigh``).

    Raises:
        ConvergenceError: the eigensolver hit its sweep cap.
        AssertionError: the eigenvalue is not simple or the eigenfunction
            changes sign on the interior; neither can happen for a connected
            graph with nonempty boundary.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    m = dirichlet_laplacian(g)
    w, vecs = _eigh(m, tol, method)
    if len(w) > 1 and w[1] - w[0] <= SIMPLE_GAP:
        raise AssertionError(f"first Dirichlet eigenvalue is not simple: {w[0]!r}, {w[1]!r}")
    f0 = vecs[:, 0]
    f0 = f0 / np.linalg.norm(f0)
    if f0[np.argmax(np.abs(f0))] < 0:
        f0 = -f0
    if not np.all(f0 > 0):
        raise AssertionError("first Dirichlet eigenfunction is not positive on the interior")
    f = np.zeros(g.n)
    f[list(g.interior)] = f0
    return EigenPair(float(w[0]), f)


def full_spectrum(g, tol: float = DEFAULT_TOL, method: str = "jacobi") -> np.ndarray:
    """All Dirichlet eigenvalues, nondecreasing."""
    w, _ = _eigh(dirichlet_laplacian(g), tol, method)
    return np.sort(w)


def _as_array(g, f) -> np.ndarray:
    if isinstance(f, Mapping):
        arr = np.zeros(g.n)
        for v, val in f.items():
            arr[v] = val
        return arr
    arr = np.asarray(f, dtype=float)
    if arr.shape != (g.n,):
        raise ValueError(f"function must have one value per vertex ({g.n})")
    return arr


def rayleigh_quotient(g, f: Sequence[float] | Mapping[int, float] | np.ndarray) -> float:
    """Sum over edges of (f(u) - f(v))^2 divided by the sum of f(v)^2.

    Raises:
        ValueError: if f is identically zero or nonzero on a boundary vertex.
    """
    f = _as_array(g, f)
    if any(f[v] != 0 for v in g.boundary):
        raise ValueError("function must vanish on the boundary")
    denom = float(f @ f)
    if denom == 0:
        raise ValueError("function is identically zero")
    e = np.array(sorted(g.edges))
    diff = f[e[:, 0]] - f[e[:, 1]]
    return float(diff @ diff) / denom


def tridiagonalize(m) -> tuple[np.ndarray, np.ndarray]:
    """Householder reduction of a symmetric matrix; returns (diagonal, offdiagonal)."""
    t = scipy.linalg.hessenberg(np.asarray(m, dtype=float))
    return np.diag(t).copy(), np.diag(t, -1).copy()


def sturm_count(diag, offdiag, x: float) -> int:
    """Number of eigenvalues of the symmetric tridiagonal matrix below ``x``."""
    count = 0
    q = 1.0
    for i, a in enumerate(diag):
        b2 = offdiag[i - 1] ** 2 if i > 0 else 0.0
        q = (a - x) - (b2 / q if i > 0 else 0.0)
        if q == 0.0:
            q = -1e-300
        if q < 0:
            count += 1
    return count
