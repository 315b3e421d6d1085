import unittest
import numpy as np
from nfoldlib.quiverlang import linear_a
from nfoldlib.repcore import Representation, structural_module, dual, direct_sum, zero_module, is_isomorphic
from tests.helpers import TestHelpers, algebra


class TestStructuralModule(unittest.TestCase, TestHelpers):

    def setUp(self):
        self.A = algebra("ex73")

    def test01_projective_dims(self):
        dims = [structural_module(self.A, "projective", v).dims for v in ("1", "2", "3")]
        self.assertEqual(dims, [(1, 0, 0), (1, 1, 0), (0, 1, 1)])

    def test02_injective_dims(self):
        dims = [structural_module(self.A, "injective", v).dims for v in ("1", "2", "3")]
        self.assertEqual(dims, [(1, 1, 0), (0, 1, 1), (0, 0, 1)])

    def test03_projective_injective(self):
        self.assertIsomorphic(structural_module(self.A, "projective", "2"),
                              structural_module(self.A, "injective", "1"))
        self.assertIsomorphic(structural_module(self.A, "projective", "3"),
                              structural_module(self.A, "injective", "2"))

    def test04_simple(self):
        S = structural_module(self.A, "simple", 3)
        self.assertEqual(S.dims, (0, 0, 1))
        self.assertEqual(S.dim_at("3"), 1)

    def test05_bad_arguments(self):
        with self.assertRaises(ValueError):
            structural_module(self.A, "projective", "7")
        with self.assertRaises(ValueError):
            structural_module(self.A, "flat", "1")

    def test06_long_path(self):
        P = structural_module(linear_a(4), "projective", "4")
        self.assertEqual(P.dims, (1, 1, 1, 1))
        np.testing.assert_array_equal(P.path_action(("a3", "a2", "a1")), [[1]])


class TestRepresentation(unittest.TestCase):

    def setUp(self):
        self.A = algebra("ex73")

    def test01_relation_must_vanish(self):
        with self.assertRaises(ValueError):
            Representation(self.A, (1, 1, 1), {"a": [[1]], "b": [[1]]})
        Representation(self.A, (1, 1, 1), {"a": [[1]], "b": [[0]]})

    def test02_shape_checks(self):
        with self.assertRaises(ValueError):
            Representation(self.A, (1, 1))
        with self.assertRaises(ValueError):
            Representation(self.A, (1, -1, 0))
        with self.assertRaises(ValueError):
            Representation(self.A, (1, 1, 0), {"b": [[1, 0]]})
        with self.assertRaises(ValueError):
            Representation(self.A, (1, 1, 0), {"c": [[1]]})

    def test03_hom_dims(self):
        P = {v: structural_module(self.A, "projective", v) for v in ("1", "2", "3")}
        self.assertEqual(P["2"].hom_dim(P["3"]), 1)
        self.assertEqual(P["3"].hom_dim(P["2"]), 0)
        self.assertEqual(P["1"].hom_dim(P["2"]), 1)
        self.assertEqual(P["2"].hom_dim(P["2"]), 1)


class TestDirectSum(unittest.TestCase, TestHelpers):

    def setUp(self):
        self.A = algebra("ex73")

    def test01_dims(self):
        P2 = structural_module(self.A, "projective", "2")
        P3 = structural_module(self.A, "projective", "3")
        M = direct_sum(P2, P3, P2)
        self.assertEqual(M.dims, (2, 3, 1))
        self.assertEqual(M.maps["a"].shape, (3, 1))

    def test02_empty(self):
        with self.assertRaises(ValueError):
            direct_sum()
        self.assertTrue(direct_sum(algebra=self.A).is_zero())
        self.assertEqual(zero_module(self.A).dims, (0, 0, 0))

    def test03_not_isomorphic(self):
        P1 = structural_module(self.A, "projective", "1")
        S2 = structural_module(self.A, "simple", "2")
        P2 = structural_module(self.A, "projective", "2")
        self.assertFalse(is_isomorphic(P2, direct_sum(P1, S2)))
        self.assertTrue(is_isomorphic(direct_sum(P1, S2), direct_sum(S2, P1)))


class TestDual(unittest.TestCase, TestHelpers):

    def test01_involution(self):
        A = algebra("ex73")
        P3 = structural_module(A, "projective", "3")
        self.assertEqual(dual(dual(P3)), P3)

    def test02_wrong_algebra(self):
        A = algebra("ex73")
        with self.assertRaises(ValueError):
            dual(structural_module(A, "simple", "1"), A)


if __name__ == '__main__':
    unittest.main()
