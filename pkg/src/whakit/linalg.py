"""Tolerance-aware dense linear algebra helpers shared by all modules.

Everything here is a thin, deterministic wrapper around numpy's SVD/eig:
rank decisions go through a :class:`~whakit.config.Tolerance`, and every
basis or eigenvector that leaves this module is normalized the same way
on every run (first significant entry real positive).
"""

from __future__ import annotations

import numpy as np

from .config import Tolerance, get_tol
from .errors import DimensionMismatch, NotNonnegative, RankDeficient

__all__ = [
    "orth",
    "kernel",
    "cokernel",
    "lstsq",
    "normalize_phase",
    "Subspace",
    "perron_frobenius",
    "is_irreducible_nonneg",
    "hermitian_sqrt",
    "eig_cluster",
]


def _as_matrix(a):
    a = np.asarray(a, dtype=complex)
    if a.ndim == 1:
        a = a.reshape(-1, 1)
    if a.ndim != 2:
        raise DimensionMismatch(f"expected a matrix, got shape {a.shape}")
    return a


def _svd_cut(s, tol: Tolerance, scale: float) -> int:
    """Number of singular values considered nonzero."""
    cut = tol.bound(scale)
    return int(np.sum(s > cut))


def normalize_phase(v, tol: Tolerance | None = None):
    """Rescale so the first entry of significant magnitude is real positive."""
    tol = get_tol(tol)
    v = np.asarray(v, dtype=complex)
    norm = np.linalg.norm(v)
    if norm == 0:
        return v
    idx = np.flatnonzero(np.abs(v) > 0.1 * np.max(np.abs(v)))
    if idx.size == 0:
        return v
    pivot = v.flat[int(idx[0])]
    return v * (abs(pivot) / pivot)


def orth(a, tol: Tolerance | None = None):
    """Orthonormal basis (columns) of the column space of ``a``."""
    tol = get_tol(tol)
    a = _as_matrix(a)
    if min(a.shape) == 0 or not np.any(a):
        return np.zeros((a.shape[0], 0), dtype=complex)
    u, s, _ = np.linalg.svd(a, full_matrices=False)
    r = _svd_cut(s, tol, s[0] if s.size else 0.0)
    q = u[:, :r]
    return np.column_stack([normalize_phase(q[:, j], tol) for j in range(r)]) if r else q


def kernel(a, tol: Tolerance | None = None):
    """Orthonormal basis (columns) of the null space of ``a``."""
    tol = get_tol(tol)
    a = _as_matrix(a)
    if a.shape[1] == 0:
        return np.zeros((a.shape[1], 0), dtype=complex)
    if a.shape[0] == 0 or not np.any(a):
        return np.eye(a.shape[1], dtype=complex)
    # the full V is only needed when a is wide; for tall a the economy SVD
    # already carries all of V, and avoids the m x m factor U
    u, s, vh = np.linalg.svd(a, full_matrices=a.shape[0] < a.shape[1])
    r = _svd_cut(s, tol, s[0])
    q = vh[r:, :].conj().T
    return np.column_stack([normalize_phase(q[:, j], tol) for j in range(q.shape[1])]) if q.shape[1] else q


def cokernel(a, tol: Tolerance | None = None):
    """Orthonormal basis of the left null space of ``a``."""
    return kernel(_as_matrix(a).conj().T, tol)


def lstsq(a, b, tol: Tolerance | None = None):
    """Least squares solve; returns ``(x, residual)`` with the actual residual norm."""
    tol = get_tol(tol)
    a = _as_matrix(a)
    b = np.asarray(b, dtype=complex)
    x = np.linalg.lstsq(a, b, rcond=None)[0]
    resid = float(np.linalg.norm(a @ x - b))
    return x, resid


def hermitian_sqrt(m, tol: Tolerance | None = None):
    """Square root of a positive semidefinite Hermitian matrix via eigh.

    Raises :class:`~whakit.errors.RankDeficient` tolerance-aware negativity is
    left to callers; eigenvalues in ``[-bound, 0)`` are clamped to zero.
    """
    tol = get_tol(tol)
    m = _as_matrix(m)
    herm_resid = np.linalg.norm(m - m.conj().T)
    if herm_resid > tol.bound(np.linalg.norm(m)):
        raise RankDeficient(f"matrix is not Hermitian (residual {herm_resid:.3e})")
    w, v = np.linalg.eigh((m + m.conj().T) / 2.0)
    scale = max(abs(w[0]), abs(w[-1])) if w.size else 0.0
    from .errors import NotPositive

    if w.size and w[0] < -tol.bound(scale):
        raise NotPositive(f"matrix has negative eigenvalue {w[0]:.3e}")
    w = np.clip(w, 0.0, None)
    return (v * np.sqrt(w)) @ v.conj().T


def eig_cluster(m, tol: Tolerance | None = None):
    """Eigenvalues of ``m`` grouped into clusters of nearly equal values.

    Returns ``(values, groups)`` where ``groups`` is a list of index arrays
    into the eigenvector matrix, and ``vectors`` the raw eigenvector matrix.
    """
    tol = get_tol(tol)
    m = _as_matrix(m)
    vals, vecs = np.linalg.eig(m)
    order = np.lexsort((vals.imag.round(6), vals.real.round(6)))
    vals = vals[order]
    vecs = vecs[:, order]
    scale = max(1.0, float(np.max(np.abs(vals))) if vals.size else 1.0)
    groups: list[list[int]] = []
    for i, lam in enumerate(vals):
        if groups and abs(lam - vals[groups[-1][-1]]) <= 1e-6 * scale:
            groups[-1].append(i)
        else:
            groups.append([i])
    return vals, [np.array(g) for g in groups], vecs


class Subspace:
    """A subspace of C^n stored as orthonormal columns.

    Supports the handful of set operations the algebra layer needs:
    membership, containment, equality (via projector distance) and
    intersection (via stacked complements).
    """

    def __init__(self, basis, ambient: int | None = None, tol: Tolerance | None = None):
        tol = get_tol(tol)
        basis = _as_matrix(basis)
        if ambient is not None and basis.shape[0] != ambient:
            raise DimensionMismatch(f"ambient {ambient} != rows {basis.shape[0]}")
        # re-orthonormalize defensively; input may be any spanning set
        self.basis = orth(basis, tol) if basis.shape[1] else basis
        self.ambient = basis.shape[0]
        self.tol = tol

    @classmethod
    def from_span(cls, vectors, ambient: int | None = None, tol: Tolerance | None = None):
        vectors = [np.asarray(v, dtype=complex).ravel() for v in vectors]
        if not vectors:
            if ambient is None:
                raise DimensionMismatch("empty span needs an explicit ambient dimension")
            return cls(np.zeros((ambient, 0)), ambient, tol)
        return cls(np.column_stack(vectors), ambient, tol)

    @property
    def dim(self) -> int:
        return self.basis.shape[1]

    def projector(self):
        return self.basis @ self.basis.conj().T

    def project(self, v):
        return self.basis @ (self.basis.conj().T @ np.asarray(v, dtype=complex))

    def distance(self, v) -> float:
        """Norm of the component of ``v`` outside the subspace."""
        v = np.asarray(v, dtype=complex)
        return float(np.linalg.norm(v - self.project(v)))

    def contains_vector(self, v, tol: Tolerance | None = None) -> bool:
        tol = get_tol(tol) if tol is not None else self.tol
        v = np.asarray(v, dtype=complex)
        return self.distance(v) <= tol.bound(np.linalg.norm(v))

    def contains(self, other: "Subspace", tol: Tolerance | None = None) -> bool:
        tol = get_tol(tol) if tol is not None else self.tol
        if other.dim == 0:
            return True
        resid = np.linalg.norm(other.basis - self.project(other.basis))
        return float(resid) <= tol.bound(np.sqrt(other.dim))

    def equals(self, other: "Subspace", tol: Tolerance | None = None) -> bool:
        return self.dim == other.dim and self.contains(other, tol) and other.contains(self, tol)

    def intersection(self, other: "Subspace") -> "Subspace":
        if self.ambient != other.ambient:
            raise DimensionMismatch("subspaces live in different ambient spaces")
        eye = np.eye(self.ambient, dtype=complex)
        stacked = np.vstack([eye - self.projector(), eye - other.projector()])
        return Subspace(kernel(stacked, self.tol), self.ambient, self.tol)

    def __repr__(self):  # pragma: no cover - debugging aid
        return f"Subspace(dim={self.dim}, ambient={self.ambient})"


def is_irreducible_nonneg(m, tol: Tolerance | None = None) -> bool:
    """Connectivity of the support graph of a nonnegative square matrix."""
    tol = get_tol(tol)
    m = np.asarray(m, dtype=float)
    n = m.shape[0]
    if n == 0:
        return True
    adj = (np.abs(m) > tol.bound(np.max(np.abs(m)) if m.size else 1.0)) | np.eye(n, dtype=bool)
    adj = adj | adj.T
    seen = {0}
    frontier = [0]
    while frontier:
        i = frontier.pop()
        for j in np.flatnonzero(adj[i]):
            if j not in seen:
                seen.add(int(j))
                frontier.append(int(j))
    return len(seen) == n


def perron_frobenius(m, tol: Tolerance | None = None):
    """Perron eigenvalue and eigenvector of an entrywise nonnegative matrix.

    The eigenvector is normalized deterministically: entrywise nonnegative,
    unit 1-norm, first significant entry positive.  Raises
    :class:`~whakit.errors.NotNonnegative` if ``m`` has a negative entry.
    """
    tol = get_tol(tol)
    m = np.asarray(m, dtype=complex)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise DimensionMismatch(f"expected square matrix, got {m.shape}")
    scale = float(np.max(np.abs(m))) if m.size else 1.0
    if np.any(m.real < -tol.bound(scale)) or np.any(np.abs(m.imag) > tol.bound(scale)):
        raise NotNonnegative("matrix has negative or non-real entries")
    m = m.real.astype(float)
    if m.shape[0] == 0:
        raise DimensionMismatch("empty matrix has no Perron data")
    vals, vecs = np.linalg.eig(m)
    k = int(np.argmax(vals.real - 1e3 * np.abs(vals.imag)))
    lam = vals[k]
    if abs(lam.imag) > tol.bound(abs(lam)):
        raise NotNonnegative(f"leading eigenvalue {lam} is not real")
    v = vecs[:, k]
    v = normalize_phase(v, tol)
    if np.any(v.real < -np.sqrt(tol.bound(1.0))) and np.any(v.real > 0):
        # reducible matrices can hand back mixed-sign vectors; fall back to
        # power iteration from a strictly positive start, which stays nonneg
        v = np.ones(m.shape[0])
        for _ in range(10000):
            w = m @ v + 1e-30
            w /= np.linalg.norm(w)
            if np.linalg.norm(w - v) < 1e-15:
                break
            v = w
    v = np.abs(v.real)
    v = v / np.sum(v)
    return float(lam.real), v
