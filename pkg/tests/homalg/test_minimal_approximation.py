import unittest
from nfoldlib.repcore import structural_module, direct_sum
from nfoldlib.homalg import (ModuleMap, hom_basis, kernel_of, cokernel_of, image_of, minimal_approximation,
                             is_approximation, strip_summands, wakamatsu_check, trace, reject)
from tests.helpers import TestHelpers, algebra


class TestModuleMap(unittest.TestCase, TestHelpers):

    def setUp(self):
        A = algebra("ex73")
        self.P1 = structural_module(A, "projective", "1")
        self.P2 = structural_module(A, "projective", "2")
        self.P3 = structural_module(A, "projective", "3")
        self.S2 = structural_module(A, "simple", "2")

    def test01_hom_dims(self):
        self.assertEqual(hom_basis(self.P2, self.P3).dim, 1)
        self.assertEqual(hom_basis(self.P3, self.P2).dim, 0)
        self.assertEqual(len(hom_basis(self.P1, self.P2)), 1)

    def test02_kernel_cokernel(self):
        f = hom_basis(self.P2, self.S2).basis[0]
        self.assertTrue(f.is_epi())
        self.assertIsomorphic(kernel_of(f).source, self.P1)
        g = hom_basis(self.P1, self.P2).basis[0]
        self.assertTrue(g.is_mono())
        self.assertIsomorphic(cokernel_of(g).target, self.S2)

    def test03_image(self):
        f = hom_basis(self.P2, self.P3).basis[0]
        self.assertIsomorphic(image_of(f).source, self.S2)
        self.assertEqual(f.rank_vector(), (0, 1, 0))

    def test04_not_a_homomorphism(self):
        with self.assertRaises(ValueError):
            ModuleMap(self.P2, self.P2, [[[1]], [[0]], []])

    def test05_composition(self):
        f = hom_basis(self.P2, self.P3).basis[0]
        g = hom_basis(self.P1, self.P2).basis[0]
        self.assertTrue((f @ g).is_zero())
        self.assertTrue(ModuleMap.identity(self.P2).is_iso())


class TestMinimalApproximation(unittest.TestCase, TestHelpers):

    def setUp(self):
        A = algebra("ex73")
        self.P1 = structural_module(A, "projective", "1")
        self.P2 = structural_module(A, "projective", "2")
        self.P3 = structural_module(A, "projective", "3")
        self.S2 = structural_module(A, "simple", "2")
        self.S3 = structural_module(A, "simple", "3")

    def test01_right(self):
        f = minimal_approximation("right", self.S3, [self.P2, self.S2, self.P3])
        self.assertEqual(f.summands, (2,))
        self.assertTrue(f.is_epi())
        self.assertIsomorphic(kernel_of(f).source, self.S2)

    def test02_left(self):
        f = minimal_approximation("left", self.P1, [self.P2, self.P3])
        self.assertEqual(f.summands, (0,))
        self.assertTrue(f.is_mono())

    def test03_zero_approximation(self):
        f = minimal_approximation("right", self.P1, [self.S3])
        self.assertEqual(f.summands, ())
        self.assertTrue(f.source.is_zero())
        self.assertTrue(is_approximation(f, [self.S3], "right"))

    def test04_strip(self):
        addset = [self.P2, self.S2, self.P3]
        f = minimal_approximation("right", self.S3, addset)
        self.assertEqual(strip_summands(f, addset, "right").summands, f.summands)

    def test05_wakamatsu(self):
        self.assertTrue(wakamatsu_check(self.S3, [self.P2, self.S2, self.P3]))

    def test06_bad_side(self):
        with self.assertRaises(ValueError):
            minimal_approximation("middle", self.S3, [self.P3])


class TestTrace(unittest.TestCase):

    def setUp(self):
        A = algebra("ex73")
        self.P2 = structural_module(A, "projective", "2")
        self.P3 = structural_module(A, "projective", "3")
        self.S3 = structural_module(A, "simple", "3")

    def test01_trace(self):
        self.assertEqual(trace([self.P2], self.P3).dims, (0, 1, 0))
        self.assertTrue(trace([], self.P3).is_zero())
        self.assertTrue(trace([self.P3], direct_sum(self.P3, self.S3)).is_whole())

    def test02_reject(self):
        self.assertEqual(reject([self.S3], self.P3).dims, (0, 1, 0))
        self.assertTrue(reject([], self.P3).is_whole())


if __name__ == '__main__':
    unittest.main()
