"""Scratch checks for the actions layer against known answers."""
import numpy as np

from whakit.algebra import FinDimAlgebra
from whakit.fixtures import cyclic_wha, pair_groupoid_wha, function_wha, pair_groupoid
from whakit import actions as act

def banner(s):
    print(f"\n=== {s} ===")

# --- translation action of C[Z_n] on F(Z_n) --------------------------------
for n in (2, 3):
    banner(f"arrow action C[Z{n}] on F(Z{n})")
    w = cyclic_wha(n)
    a = act.arrow_action(w)
    print("validate ok:", a.validate().ok)
    inv = act.invariants(a)
    print("invariants dim:", inv.dim)  # 1 (constants)
    mr, injective = act.m_r_subalgebra(a)
    print("M^R dim:", mr.dim, "injective:", injective)  # 1, True
    cp = act.crossed_product(a)
    print("crossed dim:", cp.dim, "expected:", n * n)
    blocks = cp.algebra.block_decomposition()
    print("blocks:", [b.size for b in blocks])  # [n] -> M_n
    reg = act.is_regular(a, cp)
    print("regular clauses:", reg.m_r_isomorphic, reg.relative_commutant, reg.finite_index)
    print("failing:", reg.failing_clauses())
    mat, bij = act.galois_map(a)
    print("galois shape:", mat.shape, "bijective:", bij)  # (n^2, n^2), True
    rep = act.verify_basic_construction(a, cp)
    print("basic construction checks:")
    for c in rep.checks:
        print(f"   {'PASS' if c.passed else 'FAIL'} {c.name} ({c.residual:.2e})")

# --- dual regular action on pair-groupoid(2) -------------------------------
banner("dual regular action on C[Pair2]")
w = pair_groupoid_wha(2)
a = act.dual_regular_action(w)
print("validate ok:", a.validate().ok)
inv = act.invariants(a)
print("invariants dim:", inv.dim, "(dim A^L =", w.counital_subalgebras.left.dim, ")")
mr, injective = act.m_r_subalgebra(a)
print("M^R dim:", mr.dim, "injective:", injective)  # 2, True
cp = act.crossed_product(a)
print("crossed dim:", cp.dim, "expected:", 16 // 2)
reg = act.is_regular(a, cp)
print("regular:", reg.regular, reg.details)
mat, bij = act.galois_map(a)
print("galois shape:", mat.shape, "bijective:", bij)
rep = act.verify_basic_construction(a, cp)
print("basic construction checks:")
for c in rep.checks:
    print(f"   {'PASS' if c.passed else 'FAIL'} {c.name} ({c.residual:.2e})")

# --- smash products ---------------------------------------------------------
banner("smash products")
for name, w, want_blocks in (
    ("C[Z2]", cyclic_wha(2), [2]),
    ("C[Z3]", cyclic_wha(3), [3]),
    ("C[Pair2]", pair_groupoid_wha(2), None),
    ("F(Pair2)", function_wha(pair_groupoid(2)), None),
):
    sp = act.smash_product(w)
    blocks = [b.size for b in sp.algebra.block_decomposition()]
    al_blocks = len(
        act.inclusion_matrix(w.algebra, w.counital_subalgebras.left)[1].blocks
    )
    print(f"{name}: dim {sp.dim}, blocks {blocks}, A^L block count {al_blocks}")
    if want_blocks is not None:
        assert blocks == want_blocks, (blocks, want_blocks)

# --- trivial action of C[Z2] on C -------------------------------------------
banner("trivial action C[Z2] on C")
m = FinDimAlgebra(np.ones((1, 1, 1)), [1.0], involution=np.eye(1), name="C")
w = cyclic_wha(2)
a = act.trivial_action(w, m)
print("validate ok:", a.validate().ok)
inv = act.invariants(a)
print("M^A = M:", inv.dim == m.dim)
cp = act.crossed_product(a)
print("crossed dim:", cp.dim)  # 2
reg = act.is_regular(a, cp)
print("regular:", reg.regular, "failing:", reg.failing_clauses())
mat, bij = act.galois_map(a)
print("galois shape:", mat.shape, "bijective:", bij)  # rank-deficient
