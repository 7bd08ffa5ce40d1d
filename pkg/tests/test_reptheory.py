"""Sectors, quantum dimensions, fusion, and the three index routes."""

import numpy as np
import pytest

import whakit as wk

PHI = (1 + np.sqrt(5)) / 2

IRREP_DIMS = {
    "z3": [1, 1, 1],
    "s3": [1, 1, 2],
    "p2": [2],
    "fp2": [1, 1, 1, 1],
    "m23": [2, 3],
}


@pytest.mark.parametrize("key", sorted(IRREP_DIMS))
def test_irreducible_representation_dims(examples, key):
    dims = sorted(r.dim for r in wk.irreducible_representations(examples[key]))
    assert dims == IRREP_DIMS[key]


def test_irreps_need_semisimplicity(h4):
    with pytest.raises(wk.NotSemisimple):
        wk.irreducible_representations(h4)


@pytest.mark.parametrize("key", ["z3", "p2", "m23"])
def test_regular_representation(examples, key):
    w = examples[key]
    rep = wk.regular_representation(w)
    assert rep.dim == w.dim
    assert rep.validate().ok
    # the regular module contains each block with multiplicity = its size
    mults = wk.block_multiplicities(w, rep)
    sizes = np.array(wk.block_decomposition(w.algebra).sizes)
    np.testing.assert_array_equal(np.sort(mults), np.sort(sizes))


def test_schur_orthogonality_of_intertwiners(s3):
    irr = wk.irreducible_representations(s3)
    dims = [[len(wk.intertwiner_space(s3, a, b)) for b in irr] for a in irr]
    np.testing.assert_array_equal(dims, np.eye(3, dtype=int))


def test_gns_counit_rep_dims(examples):
    for key, dim in (("z3", 1), ("p2", 2), ("fp2", 2), ("m23", 2)):
        rep = wk.gns_counit_rep(examples[key])
        assert rep.dim == dim
        assert rep.validate().ok


def test_vacua(examples):
    table = {"z3": (1, [1.0]), "s3": (1, [1.0]), "p2": (1, [2.0]), "fp2": (2, [1.0, 1.0]), "m23": (1, [2.0])}
    for key, (count, weights) in table.items():
        v = wk.vacua(examples[key])
        assert v.count == count
        np.testing.assert_allclose(sorted(np.asarray(v.weights).real), weights, atol=1e-9)


# --------------------------------------------------------------------------
# fusion


def test_cyclic_fusion_is_the_group_law(z3):
    # the fusion of the three characters is a group of order 3 (no assumption
    # on how the sector table orders them)
    table = wk.sector_dimensions(z3)
    reps = [s.rep for s in table.sectors]

    def fuse(a, b):
        mults = table.multiplicities(wk.monoidal_product(z3, reps[a], reps[b]))
        assert sorted(mults) == [0, 0, 1]
        return int(np.argmax(mults))

    vac = int(np.argmax(table.multiplicities(wk.gns_counit_rep(z3))))
    for a in range(3):
        assert fuse(a, vac) == a and fuse(vac, a) == a
        # inverse: conjugation fuses back to the vacuum
        abar = next(b for b in range(3) if fuse(a, b) == vac)
        assert fuse(abar, a) == vac
    for a in range(3):
        for b in range(3):
            assert fuse(a, b) == fuse(b, a)
            for c in range(3):
                assert fuse(fuse(a, b), c) == fuse(a, fuse(b, c))
    # some element generates the whole group (order three, not a product)
    gen = next(a for a in range(3) if a != vac)
    assert fuse(gen, gen) != vac


def test_s3_fusion_of_the_two_dimensional_sector(s3):
    table = wk.sector_dimensions(s3)
    two = next(s.rep for s in table.sectors if s.size == 2)
    mults = table.multiplicities(wk.monoidal_product(s3, two, two))
    # 2 (x) 2 = trivial + sign + 2
    np.testing.assert_array_equal(mults, [1, 1, 1])


def test_fibonacci_fusion(m23):
    table = wk.sector_dimensions(m23)
    tau = next(s.rep for s in table.sectors if s.size == 3)
    mults = table.multiplicities(wk.monoidal_product(m23, tau, tau))
    # tau (x) tau = 1 + tau
    np.testing.assert_array_equal(mults, [1, 1])


def test_fusion_is_associative_up_to_equivalence(s3):
    table = wk.sector_dimensions(s3)
    reps = [s.rep for s in table.sectors]
    a, b, c = reps[1], reps[2], reps[2]
    left = wk.monoidal_product(s3, wk.monoidal_product(s3, a, b), c)
    right = wk.monoidal_product(s3, a, wk.monoidal_product(s3, b, c))
    np.testing.assert_array_equal(table.multiplicities(left), table.multiplicities(right))


def test_conjugation_transposes_the_dimension_matrix(fp2):
    table = wk.sector_dimensions(fp2)
    for s in table.sectors:
        dm = table.dimension_matrix(s.rep)
        dm_conj = table.dimension_matrix(wk.conjugate_rep(fp2, s.rep))
        np.testing.assert_allclose(dm_conj, dm.T, atol=1e-8)


def test_fp2_sector_grid(fp2):
    # four one-dimensional sectors laid out over the two vacua
    table = wk.sector_dimensions(fp2)
    assert [s.size for s in table.sectors] == [1, 1, 1, 1]
    assert [s.vacuum_left for s in table.sectors] == [0, 0, 1, 1]
    assert [s.vacuum_right for s in table.sectors] == [0, 1, 0, 1]
    np.testing.assert_allclose(table.d_matrix, [[1.0, 1.0], [1.0, 1.0]], atol=1e-9)


# --------------------------------------------------------------------------
# quantum dimensions and the index


SECTOR_TABLE = {
    # key -> (sizes, d-values, delta)
    "z2": ([1, 1], [1.0, 1.0], 2.0),
    "z3": ([1, 1, 1], [1.0, 1.0, 1.0], 3.0),
    "s3": ([1, 1, 2], [1.0, 1.0, 2.0], 6.0),
    "p2": ([2], [1.0], 2.0),
    "p3": ([3], [1.0], 3.0),
    "m23": ([2, 3], [1.0, PHI], 2 + 3 * PHI),
}


@pytest.mark.parametrize("key", sorted(SECTOR_TABLE))
def test_sector_dimensions(examples, key):
    sizes, dvals, delta = SECTOR_TABLE[key]
    table = wk.sector_dimensions(examples[key])
    assert [s.size for s in table.sectors] == sizes
    np.testing.assert_allclose([s.d for s in table.sectors], dvals, atol=1e-9)
    assert table.delta == pytest.approx(delta, abs=1e-9)
    assert all(s.d >= 1 - 1e-12 for s in table.sectors)


def test_quantum_dimension_from_standard_solutions(m23):
    sol = wk.standard_solutions(m23, 1)
    assert sol.d == pytest.approx(PHI, abs=1e-9)
    assert sol.zigzag_left == pytest.approx(sol.zigzag_right, abs=1e-9)


def test_dimension_is_additive_and_multiplicative(s3):
    table = wk.sector_dimensions(s3)
    reps = [s.rep for s in table.sectors]
    two = reps[2]
    d = lambda rep: float(table.dimension_matrix(rep)[0, 0])
    assert d(two.direct_sum(reps[0])) == pytest.approx(d(two) + d(reps[0]), abs=1e-8)
    assert d(wk.monoidal_product(s3, two, two)) == pytest.approx(d(two) ** 2, abs=1e-8)


def test_dimension_factorization(examples):
    x, xt = wk.dimension_factorization(examples["p2"])
    np.testing.assert_allclose(x, [[1.0, 1.0]], atol=1e-9)
    np.testing.assert_allclose(xt, [[1.0], [1.0]], atol=1e-9)
    x3, _ = wk.dimension_factorization(examples["z3"])
    np.testing.assert_allclose(x3, [[np.sqrt(3)]], atol=1e-9)
    # d_A = x x^T against the sector table
    table = wk.sector_dimensions(examples["p2"])
    np.testing.assert_allclose(x @ x.T, table.d_matrix, atol=1e-9)


MARKOV = {
    "z2": 2.0, "z3": 3.0, "z4": 4.0, "z5": 5.0, "s3": 6.0,
    "p2": 2.0, "p3": 3.0, "p4": 4.0, "fp2": 2.0, "m23": 2 + 3 * PHI,
}


@pytest.mark.parametrize("key", sorted(MARKOV))
def test_markov_index(examples, key):
    assert wk.markov_index(examples[key]) == pytest.approx(MARKOV[key], abs=1e-6)


def test_markov_index_needs_a_connected_algebra():
    w = wk.groupoid_wha(wk.disjoint_union(wk.pair_groupoid(2), wk.cyclic_group(2)))
    with pytest.raises(wk.NotConnected):
        wk.markov_index(w)


def test_markov_index_agrees_with_the_sector_delta(examples):
    for key in ("s3", "fp2", "m23"):
        table = wk.sector_dimensions(examples[key])
        assert wk.markov_index(examples[key]) == pytest.approx(float(table.delta), abs=1e-6)
