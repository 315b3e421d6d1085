import unittest
from nfoldlib.quiverlang import linear_a
from nfoldlib.repcore import structural_module, direct_sum, is_isomorphic
from nfoldlib.homalg import (ext_dim, extension_middle_terms, min_proj_presentation, syzygy_module, tau,
                             global_dim, resolution_dimension, is_rigid, is_tau_rigid)
from tests.helpers import TestHelpers, algebra


class ExampleModules:

    def setUp(self):
        self.A = algebra("ex73")
        self.P = {v: structural_module(self.A, "projective", v) for v in self.A.vertices}
        self.S = {v: structural_module(self.A, "simple", v) for v in self.A.vertices}


class TestExtDim(ExampleModules, unittest.TestCase, TestHelpers):

    def test01_nonsplit(self):
        self.assertEqual(ext_dim(self.S["2"], self.P["1"]), 1)
        self.assertEqual(ext_dim(self.S["3"], self.S["2"]), 1)

    def test02_vanishing(self):
        self.assertEqual(ext_dim(self.S["3"], self.S["3"]), 0)
        self.assertEqual(ext_dim(self.S["3"], self.P["1"]), 0)
        for v in self.A.vertices:
            self.assertEqual(ext_dim(self.P[v], self.S["1"]), 0)

    def test03_second_degree(self):
        self.assertEqual(ext_dim(self.S["3"], self.P["1"], 2), 1)
        self.assertEqual(ext_dim(self.S["2"], self.P["1"], 2), 0)

    def test04_bad_degree(self):
        with self.assertRaises(ValueError):
            ext_dim(self.S["3"], self.S["2"], 0)

    def test05_middle_terms(self):
        terms = extension_middle_terms(self.S["2"], self.P["1"])
        self.assertEqual(len(terms), 2)
        self.assertIsomorphic(terms[0][1], direct_sum(self.P["1"], self.S["2"]))
        self.assertIsomorphic(terms[1][1], self.P["2"])


class TestPresentation(ExampleModules, unittest.TestCase, TestHelpers):

    def test01_simple_three(self):
        pres = min_proj_presentation(self.S["3"])
        self.assertEqual(pres.vertices0, ["3"])
        self.assertEqual(pres.vertices1, ["2"])
        self.assertTrue(pres.augmentation.is_epi())

    def test02_projective(self):
        pres = min_proj_presentation(self.P["2"])
        self.assertEqual(pres.vertices0, ["2"])
        self.assertEqual(pres.vertices1, [])

    def test03_syzygies(self):
        self.assertIsomorphic(syzygy_module(self.S["3"]), self.S["2"])
        self.assertIsomorphic(syzygy_module(self.S["3"], 2), self.P["1"])
        self.assertTrue(syzygy_module(self.S["3"], 3).is_zero())
        self.assertEqual(syzygy_module(self.S["3"], 0), self.S["3"])


class TestTau(ExampleModules, unittest.TestCase, TestHelpers):

    def test01_simples(self):
        self.assertIsomorphic(tau(self.S["2"]), self.P["1"])
        self.assertIsomorphic(tau(self.S["3"]), self.S["2"])

    def test02_projectives(self):
        for v in self.A.vertices:
            self.assertTrue(tau(self.P[v]).is_zero())

    def test03_rigidity(self):
        self.assertTrue(is_tau_rigid(self.S["2"]))
        self.assertTrue(is_tau_rigid(direct_sum(self.P["3"], self.S["3"])))
        M = direct_sum(self.S["2"], self.P["1"])
        self.assertFalse(is_tau_rigid(M))
        self.assertFalse(is_rigid(M))
        self.assertTrue(is_rigid(self.P["3"]))

    def test04_path_algebra(self):
        A = linear_a(3)
        S2 = structural_module(A, "simple", "2")
        self.assertTrue(is_isomorphic(tau(S2), structural_module(A, "simple", "1")))


class TestGlobalDim(unittest.TestCase):

    def test01_example(self):
        self.assertEqual(global_dim(algebra("ex73")), 2)
        self.assertEqual(global_dim(algebra("point")), 0)
        self.assertEqual(global_dim(algebra("a2")), 1)

    def test02_radical_square_zero(self):
        for m in range(2, 6):
            self.assertEqual(global_dim(linear_a(m, radical_square_zero=True)), m - 1)

    def test03_resolution(self):
        A = algebra("ex73")
        projectives = [structural_module(A, "projective", v) for v in A.vertices]
        S3 = structural_module(A, "simple", "3")
        self.assertEqual(resolution_dimension(S3, projectives), 2)
        self.assertEqual(resolution_dimension(projectives[1], projectives), 0)


if __name__ == '__main__':
    unittest.main()
