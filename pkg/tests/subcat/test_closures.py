import unittest
from nfoldlib.repcore import structural_module
from nfoldlib.subcat import (Subcat, fac_or_sub_closure, ext_closure, filt_membership, torsion_closure,
                             cok_or_ker_n, subcat_approximation, ext_projectives, ext_progenerator)
from tests.helpers import TestHelpers, algebra, catalog, subcat


class TestFacOrSubClosure(unittest.TestCase, TestHelpers):

    def test01_fac(self):
        self.assertSubcatLabels(fac_or_sub_closure(subcat("ex73", "P2")), ["S2", "P2"])
        self.assertSubcatLabels(fac_or_sub_closure(subcat("ex73", "P3+P1")), ["P1", "S3", "P3"])

    def test02_sub(self):
        self.assertSubcatLabels(fac_or_sub_closure(subcat("ex73", "P3"), "sub"), ["S2", "P3"])
        self.assertSubcatLabels(fac_or_sub_closure(subcat("ex73", "P2"), "sub"), ["P1", "P2"])

    def test03_empty(self):
        self.assertTrue(fac_or_sub_closure(subcat("ex73", "0")).is_empty())

    def test04_bad_side(self):
        with self.assertRaises(ValueError):
            fac_or_sub_closure(subcat("ex73", "P2"), "image")


class TestExtClosure(unittest.TestCase, TestHelpers):

    def test01_adds_middle_term(self):
        report = ext_closure(subcat("ex73", "P1+S2"))
        self.assertSubcatLabels(report.result, ["P1", "S2", "P2"])
        self.assertIn(catalog("ex73").index("P2"), report.witnesses)
        self.assertIn("P2", report.to_dict()["witnesses"])

    def test02_already_closed(self):
        report = ext_closure(subcat("ex73", "P1+S3+P3"))
        self.assertSubcatLabels(report.result, ["P1", "S3", "P3"])
        self.assertEqual(report.witnesses, {})

    def test03_chained(self):
        report = ext_closure(subcat("ex73", "S2+S3"))
        self.assertSubcatLabels(report.result, ["S2", "S3", "P3"])

    def test04_bad_bound(self):
        with self.assertRaises(ValueError):
            ext_closure(subcat("ex73", "S2"), mu=0)


class TestFiltMembership(unittest.TestCase):

    def setUp(self):
        self.A = algebra("ex73")

    def test01_members(self):
        C = subcat("ex73", "P1+S2")
        self.assertTrue(filt_membership(structural_module(self.A, "projective", "2"), C))
        self.assertFalse(filt_membership(structural_module(self.A, "simple", "3"), C))

    def test02_simples(self):
        C = subcat("ex73", "S2+S3")
        self.assertTrue(filt_membership(structural_module(self.A, "projective", "3"), C))
        self.assertFalse(filt_membership(structural_module(self.A, "projective", "2"), C))


class TestTorsionClosure(unittest.TestCase, TestHelpers):

    def test01_one_fold(self):
        self.assertSubcatLabels(torsion_closure(subcat("ex73", "P2+S3")), ["S2", "S3", "P2", "P3"])
        self.assertSubcatLabels(torsion_closure(subcat("ex73", "P2"), side="torf"), ["P1", "P2"])

    def test02_two_fold(self):
        self.assertSubcatLabels(torsion_closure(subcat("ex73", "P2+S3"), 2), ["S3", "P2"])
        self.assertSubcatLabels(torsion_closure(subcat("ex73", "P2+P3"), 2), ["S3", "P2", "P3"])
        self.assertSubcatLabels(torsion_closure(subcat("ex73", "P2+P3"), 2, "torf"), ["P1", "P2", "P3"])

    def test03_bad_arguments(self):
        with self.assertRaises(ValueError):
            torsion_closure(subcat("ex73", "P2"), 0)
        with self.assertRaises(ValueError):
            torsion_closure(subcat("ex73", "P2"), 1, "wide")


class TestCokOrKerN(unittest.TestCase, TestHelpers):

    def test01_zero_is_fac(self):
        self.assertSubcatLabels(cok_or_ker_n(subcat("ex73", "P1+P2"), 0), ["P1", "S2", "P2"])

    def test02_one(self):
        self.assertSubcatLabels(cok_or_ker_n(subcat("ex73", "P1+P2"), 1), ["P1", "S2", "P2"])
        self.assertSubcatLabels(cok_or_ker_n(subcat("ex73", "P2"), 1), ["P2"])

    def test03_report(self):
        report = cok_or_ker_n(subcat("ex73", "P1+P2"), 1, report=True)
        self.assertTrue(report.exact)
        self.assertEqual(report.witnesses[catalog("ex73").index("S2")], "0 -> P1 -> P2 -> M -> 0")

    def test04_kernels(self):
        self.assertSubcatLabels(cok_or_ker_n(subcat("ex73", "P3"), 0, "ker"), ["S2", "P3"])

    def test05_bad_arguments(self):
        with self.assertRaises(ValueError):
            cok_or_ker_n(subcat("ex73", "P2"), -1)
        with self.assertRaises(ValueError):
            cok_or_ker_n(subcat("ex73", "P2"), 1, "image")


class TestExtProjectives(unittest.TestCase, TestHelpers):

    def test01_projectives(self):
        self.assertSubcatLabels(ext_projectives(subcat("ex73", "P1+S2+P2")), ["P1", "P2"])
        self.assertSubcatLabels(ext_projectives(subcat("ex73", "S2+S3+P2+P3")), ["S2", "P2", "P3"])

    def test02_progenerator(self):
        self.assertSubcatLabels(ext_progenerator(subcat("ex73", "P1+S2+P2")), ["P1", "P2"])
        self.assertSubcatLabels(ext_progenerator(subcat("ex73", "S2+S3+P2+P3")), ["S2", "P2", "P3"])
        self.assertSubcatLabels(ext_progenerator(subcat("ex73", "S3")), ["S3"])

    def test03_no_progenerator(self):
        self.assertIsNone(ext_progenerator(subcat("ex73", "S2+S3")))

    def test04_approximation(self):
        cat = catalog("ex73")
        f = subcat_approximation(cat.indecs[cat.index("S3")], subcat("ex73", "P2+S2+P3"))
        self.assertEqual(f.summands, (cat.index("P3"),))
        self.assertTrue(f.is_epi())


if __name__ == '__main__':
    unittest.main()
