import collections
import unittest
from nfoldlib.errors import DecompositionError
from nfoldlib.repcore import Representation, structural_module, direct_sum, decompose
from tests.helpers import TestHelpers, algebra, catalog


class TestDecompose(unittest.TestCase, TestHelpers):

    def setUp(self):
        self.A = algebra("ex73")
        self.cat = catalog("ex73")

    def test01_indecomposables(self):
        for i, X in enumerate(self.cat.indecs):
            self.assertEqual(decompose(X, self.cat), collections.Counter({i: 1}))

    def test02_sum(self):
        P2 = structural_module(self.A, "projective", "2")
        S3 = structural_module(self.A, "simple", "3")
        parts = decompose(direct_sum(P2, S3, P2), self.cat)
        self.assertEqual(parts, collections.Counter({self.cat.index("P2"): 2, self.cat.index("S3"): 1}))

    def test03_twisted_basis(self):
        M = Representation(self.A, (1, 2, 1), {"a": [[1], [1]], "b": [[1, 1]]})
        parts = decompose(M, self.cat)
        self.assertEqual(sum(parts.values()), 2)
        self.assertEqual(sorted(self.cat.labels[j] for j in parts), ["P2", "P3"])

    def test04_zero(self):
        self.assertEqual(decompose(direct_sum(algebra=self.A), self.cat), collections.Counter())

    def test05_other_algebra(self):
        with self.assertRaises(ValueError):
            decompose(structural_module(algebra("a2"), "simple", "1"), self.cat)

    def test06_error_type(self):
        self.assertTrue(issubclass(DecompositionError, ValueError))


if __name__ == '__main__':
    unittest.main()
