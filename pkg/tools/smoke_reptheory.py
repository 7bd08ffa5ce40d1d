"""Scratch checks for the representation/sector layer against known answers."""
import numpy as np

from whakit.fixtures import cyclic_wha, pair_groupoid_wha, function_wha, pair_groupoid, sweedler_h4
from whakit.errors import NotSemisimple
from whakit import reptheory as rt
from whakit.wha import dual_wha

def banner(s):
    print(f"\n=== {s} ===")

# --- C[Z_3] ---------------------------------------------------------------
banner("C[Z3]")
w = cyclic_wha(3)
reg = rt.regular_representation(w)
print("regular validate:", reg.validate().ok, "star:", reg.is_star())
de = rt.gns_counit_rep(w)
print("D_eps dim:", de.dim)  # expect 1
irr = rt.irreducible_representations(w)
print("irrep dims:", [r.dim for r in irr])  # [1,1,1]
# conjugate of a character is the inverse character
for r in irr:
    rb = rt.conjugate_rep(w, r)
    print("  char:", np.round([r.matrices[j][0, 0] for j in range(3)], 6),
          "conj:", np.round([rb.matrices[j][0, 0] for j in range(3)], 6))
vac = rt.vacua(w)
print("vacua:", vac.count, "weights:", vac.weights)  # 1, [1.0]
tab = rt.sector_dimensions(w)
print("d_q:", [round(s.d, 9) for s in tab.sectors])  # all 1
print("d_matrix:", tab.d_matrix, "delta:", tab.delta)  # [[3]], 3
print("markov_index:", rt.markov_index(w))  # 3
dl, dr = rt.dimension_factorization(w)
print("dL:", dl)  # [[sqrt(3)]]
# fusion: chi_a (x) chi_b = chi_{a+b}
p = rt.monoidal_product(w, irr[1], irr[1])
print("chi1 (x) chi1 dim:", p.dim, "mult:", rt.block_multiplicities(w, p))
print("additive d:", tab.dimension_matrix(irr[1].direct_sum(irr[2])))

# --- C[Pair_2] ------------------------------------------------------------
banner("C[Pair2]")
w = pair_groupoid_wha(2)
de = rt.gns_counit_rep(w)
print("D_eps dim:", de.dim)  # 2 (A^L dim 2)
vac = rt.vacua(w)
print("vacua:", vac.count, "weights:", vac.weights)  # 1, [2.0]
tab = rt.sector_dimensions(w)
print("sector sizes:", [s.size for s in tab.sectors], "d:", [round(s.d, 9) for s in tab.sectors])
print("d_matrix:", tab.d_matrix)  # [[2]]
print("markov_index:", rt.markov_index(w))  # 2
dl, dr = rt.dimension_factorization(w)
print("dL:", dl, "dR:", dr)  # (1,2) all-ones roughly

# --- F(Pair_2) ------------------------------------------------------------
banner("F(Pair2)")
w = function_wha(pair_groupoid(2))
vac = rt.vacua(w)
print("vacua:", vac.count, "weights:", vac.weights)  # 2, [1,1]
tab = rt.sector_dimensions(w)
print("sector d:", [round(s.d, 9) for s in tab.sectors],
      "vac pairs:", [(s.vacuum_left, s.vacuum_right) for s in tab.sectors])
print("d_matrix:\n", tab.d_matrix)  # all-ones 2x2
print("markov_index:", rt.markov_index(w))  # 2
dl, dr = rt.dimension_factorization(w)
print("dL:\n", np.round(dl, 9))  # (2,1) column of ones

# --- C[Pair_3]: d=1 sector with n_q=3 --------------------------------------
banner("C[Pair3]")
w = pair_groupoid_wha(3)
tab = rt.sector_dimensions(w)
print("sizes:", [s.size for s in tab.sectors], "d:", [round(s.d, 9) for s in tab.sectors])
print("markov_index:", rt.markov_index(w))  # 3

# --- C[Z2] x C[Z2] via symmetric group S3 ----------------------------------
banner("C[S3]")
from whakit.fixtures import symmetric_wha
w = symmetric_wha(3)
tab = rt.sector_dimensions(w)
print("sizes:", [s.size for s in tab.sectors], "d:", [round(s.d, 9) for s in tab.sectors])
print("markov_index:", rt.markov_index(w))  # 6 = 1+1+2*2
m = rt.monoidal_product(w, tab.sectors[-1].rep, tab.sectors[-1].rep)
print("2dim (x) 2dim multiplicities:", rt.block_multiplicities(w, m))

# --- H4: no Haar -> NotSemisimple ------------------------------------------
banner("H4")
w = sweedler_h4()
try:
    rt.sector_dimensions(w)
    print("ERROR: expected NotSemisimple")
except NotSemisimple as e:
    print("NotSemisimple raised:", e)
