import importlib
import unittest
from unittest import mock
from nfoldlib.errors import GuardExceededError, VerificationError
from nfoldlib.subcat import Verdict, enumerate_nfold, is_cne_closed, torsion_closure
from nfoldlib.stringindec import build_catalog
from tests.helpers import TestHelpers, algebra, catalog, subcat


class TestEnumerateNfold(unittest.TestCase, TestHelpers):

    def test01_counts(self):
        cat = catalog("ex73")
        self.assertEqual(len(enumerate_nfold(cat, 1)), 12)
        self.assertEqual(len(enumerate_nfold(cat, 1, "torf")), 12)
        self.assertEqual(len(enumerate_nfold(cat, 2)), 17)

    def test02_nested(self):
        cat = catalog("ex73")
        one = set(enumerate_nfold(cat, 1))
        two = set(enumerate_nfold(cat, 2))
        self.assertTrue(one <= two)
        self.assertIn(subcat("ex73", "P2+S3"), two - one)

    def test03_closures_are_classes(self):
        cat = catalog("ex73")
        two = set(enumerate_nfold(cat, 2))
        for label in ("P2", "P2+P3", "P2+S3", "S2+S3"):
            self.assertIn(torsion_closure(subcat("ex73", label), 2), two, msg=label)

    def test04_torsion_free_depth(self):
        cat = catalog("nak3")
        C = subcat("nak3", "P2+P3")
        self.assertNotIn(C, enumerate_nfold(cat, 2, "torf"))
        self.assertIn(C, enumerate_nfold(cat, 3, "torf"))

    def test05_sorted(self):
        classes = enumerate_nfold(catalog("ex73"), 2)
        self.assertTrue(classes[0].is_empty())
        self.assertTrue(classes[-1].is_full())
        sizes = [len(C) for C in classes]
        self.assertEqual(sizes, sorted(sizes))

    def test06_guard(self):
        with self.assertRaises(GuardExceededError):
            enumerate_nfold(build_catalog(algebra("a3")), 2, guard=8)

    def test07_bad_arguments(self):
        with self.assertRaises(ValueError):
            enumerate_nfold(catalog("ex73"), 0)
        with self.assertRaises(ValueError):
            enumerate_nfold(catalog("ex73"), 1, "wide")

    def test08_torsion_free_depth_nak4(self):
        cat = catalog("nak4")
        C = subcat("nak4", "P2+P3+P4")
        self.assertNotIn(C, enumerate_nfold(cat, 3, "torf"))
        self.assertIn(C, enumerate_nfold(cat, 4, "torf"))

    def test09_hereditary_stabilises(self):
        cat = catalog("a3")
        self.assertEqual(enumerate_nfold(cat, 3), enumerate_nfold(cat, 2))

    def test10_classes_are_closed(self):
        cat = catalog("ex73")
        for C in enumerate_nfold(cat, 2, "tors"):
            self.assertTrue(is_cne_closed(C, 1, "cok"), msg=C.label())
        for C in enumerate_nfold(cat, 2, "torf"):
            self.assertTrue(is_cne_closed(C, 1, "ker"), msg=C.label())

    def test11_failed_check_raises(self):
        module = importlib.import_module("nfoldlib.subcat.enumerate_nfold")
        with mock.patch.object(module, "is_cne_closed", return_value=Verdict(False, "forced")):
            with self.assertRaises(VerificationError):
                enumerate_nfold(build_catalog(algebra("a2")), 2)


if __name__ == '__main__':
    unittest.main()
