import numpy as np
import pytest

from whakit.config import Tolerance
from whakit.errors import DimensionMismatch, NotNonnegative
from whakit.linalg import (
    Subspace,
    eig_cluster,
    hermitian_sqrt,
    is_irreducible_nonneg,
    kernel,
    lstsq,
    orth,
    perron_frobenius,
)

RNG = np.random.default_rng(0x57484131)


def test_orth_orthonormal_and_span():
    a = RNG.normal(size=(7, 4)) + 1j * RNG.normal(size=(7, 4))
    a[:, 3] = a[:, 0] + a[:, 1]  # force rank 3
    q = orth(a)
    assert q.shape == (7, 3)
    assert np.allclose(q.conj().T @ q, np.eye(3), atol=1e-12)
    # original columns lie in the span of q
    assert np.linalg.norm(a - q @ (q.conj().T @ a)) < 1e-10


def test_kernel_wide_and_tall():
    for shape in ((3, 8), (8, 3), (6, 6)):
        a = RNG.normal(size=shape) + 1j * RNG.normal(size=shape)
        a[:, -1] = a[:, 0]  # guarantee a nontrivial kernel
        k = kernel(a)
        assert k.shape[1] >= 1
        assert np.linalg.norm(a @ k) < 1e-10
        assert np.allclose(k.conj().T @ k, np.eye(k.shape[1]), atol=1e-12)
        # rank-nullity
        assert k.shape[1] == shape[1] - np.linalg.matrix_rank(a, tol=1e-10)


def test_lstsq_exact_and_inconsistent():
    a = RNG.normal(size=(5, 3))
    x = RNG.normal(size=3)
    sol, resid = lstsq(a, a @ x)
    assert np.allclose(sol, x, atol=1e-10)
    assert resid < 1e-10
    # an inconsistent system reports a nonzero residual
    b = np.zeros(5)
    b[0] = 1.0
    a_bad = np.zeros((5, 1))
    a_bad[1, 0] = 1.0
    _, resid = lstsq(a_bad, b)
    assert resid > 0.9


def test_subspace_operations():
    s1 = Subspace(np.array([[1.0, 0.0], [0.0, 1.0], [0.0, 0.0]]), 3)
    s2 = Subspace(np.array([[0.0], [1.0], [0.0]]), 3)
    assert s1.dim == 2 and s2.dim == 1
    assert s1.contains(s2) and not s2.contains(s1)
    inter = s1.intersection(s2)
    assert inter.dim == 1 and inter.equals(s2)
    assert s1.contains_vector([1.0, 2.0, 0.0])
    assert not s1.contains_vector([0.0, 0.0, 1.0])
    assert s2.distance([0.0, 0.0, 1.0]) == pytest.approx(1.0)
    with pytest.raises(DimensionMismatch):
        Subspace(np.eye(3), ambient=4)


def test_perron_frobenius_known_matrix():
    # golden-ratio graph: largest eigenvalue of [[0,1],[1,1]] is (1+sqrt 5)/2
    lam, vec = perron_frobenius(np.array([[0.0, 1.0], [1.0, 1.0]]))
    assert lam == pytest.approx((1 + np.sqrt(5)) / 2, abs=1e-12)
    assert np.all(vec > 0)
    with pytest.raises(NotNonnegative):
        perron_frobenius(np.array([[1.0, -0.5], [0.0, 1.0]]))


def test_irreducibility_of_support_graph():
    assert is_irreducible_nonneg(np.array([[0.0, 1.0], [1.0, 0.0]]))
    assert not is_irreducible_nonneg(np.diag([1.0, 2.0]))


def test_hermitian_sqrt():
    a = RNG.normal(size=(4, 4)) + 1j * RNG.normal(size=(4, 4))
    h = a @ a.conj().T + np.eye(4)
    r = hermitian_sqrt(h)
    assert np.allclose(r @ r, h, atol=1e-10)
    assert np.allclose(r, r.conj().T, atol=1e-10)


def test_eig_cluster_groups_degenerate_eigenvalues():
    d = np.diag([1.0, 1.0 + 1e-13, 2.0])
    vals, groups, _ = eig_cluster(d, Tolerance(1e-9, 1e-9))
    sizes = sorted(len(g) for g in groups)
    assert sizes == [1, 2]
    assert len(vals) == 3
