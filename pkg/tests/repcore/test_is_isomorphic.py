import unittest
from nfoldlib.errors import GuardExceededError
from nfoldlib.repcore import Representation, structural_module, direct_sum, is_isomorphic
from tests.helpers import TestHelpers, algebra


class TestIsIsomorphic(unittest.TestCase, TestHelpers):

    def setUp(self):
        self.A = algebra("ex73")
        self.P1 = structural_module(self.A, "projective", "1")
        self.P2 = structural_module(self.A, "projective", "2")
        self.P3 = structural_module(self.A, "projective", "3")
        self.S2 = structural_module(self.A, "simple", "2")
        self.twisted = Representation(self.A, (1, 2, 1), {"a": [[1], [1]], "b": [[1, 1]]})

    def test01_same_dims_not_isomorphic(self):
        self.assertFalse(is_isomorphic(direct_sum(self.P1, self.S2), self.P2))

    def test02_dims_differ(self):
        self.assertFalse(is_isomorphic(self.P2, self.P3))

    def test03_change_of_basis(self):
        self.assertTrue(is_isomorphic(self.twisted, direct_sum(self.P2, self.P3)))

    def test04_exhaustive_search(self):
        self.assertTrue(is_isomorphic(self.twisted, direct_sum(self.P2, self.P3), sample_budget=0))

    def test05_inconclusive(self):
        with self.assertRaises(GuardExceededError):
            is_isomorphic(self.twisted, direct_sum(self.P2, self.P3), sample_budget=0, enum_guard=1)

    def test06_zero_and_identical(self):
        zero = direct_sum(algebra=self.A)
        self.assertTrue(is_isomorphic(zero, direct_sum(algebra=self.A)))
        self.assertTrue(is_isomorphic(self.P2, self.P2))

    def test07_different_algebras(self):
        with self.assertRaises(ValueError):
            is_isomorphic(self.P2, structural_module(algebra("a2"), "projective", "2"))


if __name__ == '__main__':
    unittest.main()
