"""Module algebra actions, crossed products, regularity, Galois, smash."""

import numpy as np
import pytest

import whakit as wk


@pytest.fixture(scope="module")
def scalars():
    return wk.FinDimAlgebra(
        np.ones((1, 1, 1)), np.array([1.0]), involution=np.eye(1), name="C"
    )


def _actions(examples):
    return {
        "arrow z2": wk.arrow_action(examples["z2"]),
        "arrow z3": wk.arrow_action(examples["z3"]),
        "arrow fp2": wk.arrow_action(examples["fp2"]),
        "dualreg z3": wk.dual_regular_action(examples["z3"]),
        "dualreg p2": wk.dual_regular_action(examples["p2"]),
        "dualreg p3": wk.dual_regular_action(examples["p3"]),
    }


@pytest.fixture(scope="module")
def actions(examples):
    return _actions(examples)


REGULAR = ["dualreg p2", "dualreg p3", "arrow fp2"]
NON_REGULAR = ["arrow z2", "arrow z3", "dualreg z3"]

# name -> (module dim, crossed dim, blocks, invariants dim)
CROSSED = {
    "arrow z2": (2, 4, (2,), 1),
    "arrow z3": (3, 9, (3,), 1),
    "arrow fp2": (4, 8, (2, 2), 2),
    "dualreg z3": (3, 9, (3,), 1),
    "dualreg p2": (4, 8, (2, 2), 2),
    "dualreg p3": (9, 27, (3, 3, 3), 3),
}


@pytest.mark.parametrize("name", sorted(CROSSED))
def test_action_axioms(actions, name):
    rep = wk.validate_action(actions[name])
    assert rep.ok, [f.name for f in rep.failures]


@pytest.mark.parametrize("name", sorted(CROSSED))
def test_crossed_product_dimensions_and_blocks(actions, name):
    act = actions[name]
    dim_m, dim_cross, blocks, dim_inv = CROSSED[name]
    assert act.module.dim == dim_m
    cp = wk.crossed_product(act)
    assert cp.algebra.dim == dim_cross
    assert cp.report.ok
    assert wk.block_decomposition(cp.algebra).sizes == blocks
    assert wk.invariants(act).dim == dim_inv
    # dim(M x| A) = dim M * dim A / dim A^L on these (A free over A^L)
    al = act.wha.counital_subalgebras.left.dim
    assert cp.algebra.dim == act.module.dim * act.wha.dim // al


@pytest.mark.parametrize("name", sorted(CROSSED))
def test_crossed_product_embeddings(actions, name):
    # m -> m x| 1 and a -> 1 x| a are multiplicative into the crossed product
    act = actions[name]
    cp = wk.crossed_product(act)
    big, m_alg, w = cp.algebra, act.module, act.wha
    r = np.random.default_rng(0x57484131)
    m1, m2 = r.normal(size=(2, m_alg.dim))
    a1, a2 = r.normal(size=(2, w.dim))
    assert np.linalg.norm(cp.embed_m @ m_alg.mul(m1, m2) - big.mul(cp.embed_m @ m1, cp.embed_m @ m2)) < 1e-8
    assert np.linalg.norm(cp.embed_a @ w.mul(a1, a2) - big.mul(cp.embed_a @ a1, cp.embed_a @ a2)) < 1e-8
    assert np.linalg.norm(cp.element(m_alg.unit, w.unit) - big.unit) < 1e-8
    # covariance: (1 x| a)(m x| 1) = alpha_{a_(1)}(m) x| a_(2)
    lhs = big.mul(cp.embed_a @ a1, cp.embed_m @ m1)
    d = w.coproduct(a1)
    rhs = np.zeros(big.dim, dtype=complex)
    eye = np.eye(w.dim)
    for p in range(w.dim):
        for q in range(w.dim):
            if abs(d[p, q]) < 1e-14:
                continue
            rhs += d[p, q] * cp.element(act.amat(eye[p]) @ m1, eye[q])
    assert np.linalg.norm(lhs - rhs) < 1e-8


def test_ill_defined_product_is_rejected(examples):
    act = wk.arrow_action(examples["z3"])
    bad = wk.WhaAction(act.wha, act.module, act.alpha.copy(), name="broken")
    bad.alpha[0, 1, 2] += 1e-2
    with pytest.raises((wk.IllDefinedProduct, wk.ValidationError)):
        wk.crossed_product(wk.WhaAction(act.wha, act.module, bad.alpha, name="broken"))


@pytest.mark.parametrize("name", REGULAR)
def test_regular_actions(actions, name):
    act = actions[name]
    reg = wk.is_regular(act)
    assert reg.regular
    assert reg.failing_clauses() == []
    rep = wk.verify_basic_construction(act)
    assert rep.ok, [f.name for f in rep.failures]
    _, bij = wk.galois_map(act)
    assert bij


@pytest.mark.parametrize("name", NON_REGULAR)
def test_translation_type_actions_are_not_regular(actions, name):
    # M is maximal abelian in M x| A, so the relative commutant is M itself,
    # strictly larger than A^R: clause (ii) fails while (i) and (iii) hold
    act = actions[name]
    reg = wk.is_regular(act)
    assert not reg.regular
    assert reg.m_r_isomorphic and reg.finite_index and not reg.relative_commutant
    clauses = reg.failing_clauses()
    assert len(clauses) == 1 and "(ii)" in clauses[0]
    # the Galois map is still bijective for these translation-type actions
    _, bij = wk.galois_map(act)
    assert bij


def test_basic_construction_items_fail_exactly_where_expected(actions):
    rep = wk.verify_basic_construction(actions["arrow z3"])
    assert not rep.ok
    failing = {f.name for f in rep.failures}
    assert failing == {
        "item2: N' in M = A^L",
        "item3: M' in M2 = A^R",
        "item4: N' in M2 = A",
        "item5: Center M = A^L n A^R",
    }


def test_trivial_action(examples, scalars):
    act = wk.trivial_action(examples["z2"], scalars)
    assert wk.validate_action(act).ok
    assert wk.invariants(act).dim == 1
    cp = wk.crossed_product(act)
    assert cp.algebra.dim == 2
    mat, bij = wk.galois_map(act)
    assert mat.shape == (2, 1)
    assert not bij
    reg = wk.is_regular(act)
    assert not reg.regular
    assert any("(ii)" in c for c in reg.failing_clauses())


def test_m_r_subalgebra(actions):
    for name in ("arrow z3", "dualreg p2"):
        act = actions[name]
        span, injective = wk.m_r_subalgebra(act)
        assert injective
        assert span.dim == act.wha.counital_subalgebras.left.dim


# --------------------------------------------------------------------------
# smash products


SMASH = {
    "z2": (4, (2,)),
    "z3": (9, (3,)),
    "p2": (8, (2, 2)),
    "fp2": (8, (2, 2)),
    "s3": (36, (6,)),
    "h4": (16, (4,)),
}


@pytest.mark.parametrize("key", sorted(SMASH))
def test_smash_product_block_structure(examples, key):
    w = examples[key]
    dim, blocks = SMASH[key]
    sp = wk.smash_product(w)
    assert sp.algebra.dim == dim
    assert wk.block_decomposition(sp.algebra).sizes == blocks
    # block count matches the block count of A^L
    al_alg, _ = wk.induced_algebra(w.algebra, w.counital_subalgebras.left)
    assert len(blocks) == len(wk.block_decomposition(al_alg).blocks)


def test_smash_of_a_group_algebra_is_a_full_matrix_algebra(examples):
    # C[Z_n] # C(Z_n) = M_n: one block of size n, center of dimension 1
    sp = wk.smash_product(examples["z3"])
    assert wk.block_decomposition(sp.algebra).sizes == (3,)
    assert sp.algebra.center().dim == 1
