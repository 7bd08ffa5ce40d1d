"""Example constructors: groupoid combinatorics, dimensions, perturbation."""

import unittest

import numpy as np

import whakit as wk


class TestGroupoids(unittest.TestCase):
    def test_morphism_counts(self):
        table = [
            (wk.cyclic_group(1), 1, 1),
            (wk.cyclic_group(4), 1, 4),
            (wk.symmetric_group(3), 1, 6),
            (wk.pair_groupoid(2), 2, 4),
            (wk.pair_groupoid(4), 4, 16),
        ]
        for g, objects, morphisms in table:
            g.validate()
            self.assertEqual(len(g.objects), objects)
            self.assertEqual(len(g.morphisms), morphisms)

    def test_disjoint_union(self):
        g = wk.disjoint_union(wk.pair_groupoid(2), wk.cyclic_group(3))
        g.validate()
        self.assertEqual(len(g.objects), 3)
        self.assertEqual(len(g.morphisms), 7)

    def test_composition_is_partial(self):
        g = wk.pair_groupoid(2)
        # morphisms (i <- j) compose only when the inner objects match
        composable = sum(
            1
            for f in g.morphisms
            for h in g.morphisms
            if g.source[f] == g.target[h]
        )
        self.assertEqual(composable, 8)
        self.assertEqual(len(g.compose), 8)

    def test_invalid_groupoid_rejected(self):
        with self.assertRaises(wk.WhakitError):
            wk.pair_groupoid(0)
        with self.assertRaises(wk.WhakitError):
            wk.cyclic_group(-1)


class TestExampleAlgebras(unittest.TestCase):
    def test_dimension_table(self):
        table = [
            (wk.cyclic_wha(2), 2),
            (wk.cyclic_wha(5), 5),
            (wk.symmetric_wha(3), 6),
            (wk.pair_groupoid_wha(2), 4),
            (wk.pair_groupoid_wha(4), 16),
            (wk.function_wha(wk.pair_groupoid(2)), 4),
            (wk.sweedler_h4(), 4),
            (wk.m2_m3(), 13),
        ]
        for w, dim in table:
            self.assertEqual(w.dim, dim)

    def test_groupoid_wha_matches_the_named_constructors(self):
        np.testing.assert_array_equal(
            wk.cyclic_wha(3).algebra.c, wk.groupoid_wha(wk.cyclic_group(3)).algebra.c
        )
        np.testing.assert_array_equal(
            wk.pair_groupoid_wha(2).algebra.c,
            wk.groupoid_wha(wk.pair_groupoid(2)).algebra.c,
        )

    def test_function_algebra_is_the_dual_of_the_groupoid_algebra(self):
        g = wk.pair_groupoid(2)
        f = wk.function_wha(g)
        d = wk.dual_wha(wk.groupoid_wha(g))
        self.assertLess(np.linalg.norm(f.algebra.c - d.algebra.c), 1e-12)
        self.assertLess(np.linalg.norm(f.delta - d.delta), 1e-12)

    def test_function_algebra_is_commutative(self):
        c = wk.function_wha(wk.pair_groupoid(3)).algebra.c
        self.assertLess(np.linalg.norm(c - c.transpose(1, 0, 2)), 1e-12)

    def test_involutions(self):
        self.assertIsNone(wk.sweedler_h4().algebra.involution)
        for w in (wk.cyclic_wha(3), wk.pair_groupoid_wha(2), wk.m2_m3()):
            self.assertIsNotNone(w.algebra.involution)

    def test_m2_m3_block_structure(self):
        w = wk.m2_m3()
        self.assertEqual(wk.block_decomposition(w.algebra).sizes, (2, 3))
        self.assertTrue(wk.validate_wba(w).ok)
        self.assertTrue(wk.validate_star(w).ok)
        self.assertFalse(wk.is_weak_kac(w))

    def test_sweedler_h4_is_not_semisimple(self):
        w = wk.sweedler_h4()
        self.assertTrue(wk.validate_wba(w).ok)
        self.assertFalse(w.algebra.is_semisimple())


class TestPerturb(unittest.TestCase):
    def setUp(self):
        self.w = wk.cyclic_wha(3)

    def test_changes_exactly_one_coefficient(self):
        for field, array in [
            ("structure_constants", lambda b: b.algebra.c),
            ("unit", lambda b: b.unit),
            ("counit", lambda b: b.eps),
            ("comultiplication", lambda b: b.delta),
            ("antipode", lambda b: b.antipode),
            ("involution", lambda b: b.algebra.involution),
        ]:
            broken = wk.perturb(self.w, field=field, magnitude=1e-3, seed=9)
            diff = np.asarray(array(broken)) - np.asarray(array(self.w))
            nz = np.flatnonzero(np.abs(diff) > 0)
            self.assertEqual(len(nz), 1, field)
            self.assertAlmostEqual(float(np.abs(diff).max()), 1e-3, places=15)

    def test_explicit_index_targets_that_coefficient(self):
        broken = wk.perturb(self.w, field="counit", index=2)
        diff = broken.eps - self.w.eps
        self.assertAlmostEqual(float(diff[2].real), 1e-3)
        self.assertEqual(np.count_nonzero(diff), 1)

    def test_same_seed_same_coefficient(self):
        b1 = wk.perturb(self.w, seed=4)
        b2 = wk.perturb(self.w, seed=4)
        np.testing.assert_array_equal(b1.algebra.c, b2.algebra.c)

    def test_bad_field_rejected(self):
        with self.assertRaises(ValueError):
            wk.perturb(self.w, field="epsilon")

    def test_missing_involution_rejected(self):
        with self.assertRaises(ValueError):
            wk.perturb(wk.sweedler_h4(), field="involution")

    def test_original_is_untouched(self):
        c0 = self.w.algebra.c.copy()
        wk.perturb(self.w, field="structure_constants", seed=0)
        np.testing.assert_array_equal(self.w.algebra.c, c0)


if __name__ == "__main__":
    unittest.main()
