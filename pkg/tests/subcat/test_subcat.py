import unittest
from nfoldlib.errors import GuardExceededError
from nfoldlib.subcat import Subcat, Verdict, mask_of, check_catalog_size
from tests.helpers import TestHelpers, catalog, subcat


class TestSubcat(unittest.TestCase, TestHelpers):

    def setUp(self):
        self.cat = catalog("ex73")

    def test01_parse(self):
        self.assertSubcatLabels(subcat("ex73", "P2+S3"), ["P2", "S3"])
        self.assertEqual(subcat("ex73", "add(P2+S3)"), subcat("ex73", "S3,P2"))
        self.assertTrue(subcat("ex73", "0").is_empty())
        self.assertTrue(subcat("ex73", "{0}").is_empty())
        self.assertTrue(subcat("ex73", "mod").is_full())

    def test02_parse_errors(self):
        with self.assertRaises(ValueError):
            subcat("ex73", "P2++S3")
        with self.assertRaises(ValueError):
            subcat("ex73", "P7")
        with self.assertRaises(ValueError):
            Subcat(self.cat, 1 << 5)
        with self.assertRaises(ValueError):
            Subcat.from_indices(self.cat, [5])

    def test03_label(self):
        self.assertEqual(subcat("ex73", "S3+P2").label(), "add(S3+P2)")
        self.assertEqual(Subcat.empty(self.cat).label(), "{0}")
        self.assertEqual(Subcat.full(self.cat).label(), "mod")

    def test04_operations(self):
        A = subcat("ex73", "P1+S2")
        B = subcat("ex73", "S2+P2")
        self.assertSubcatLabels(A | B, ["P1", "S2", "P2"])
        self.assertSubcatLabels(A & B, ["S2"])
        self.assertSubcatLabels(A - B, ["P1"])
        self.assertTrue(A & B <= A)
        self.assertTrue(A & B < A)
        self.assertFalse(A < A)
        self.assertEqual(len(A | B), 3)
        self.assertIn(self.cat.index("S2"), A)

    def test05_other_catalog(self):
        with self.assertRaises(ValueError):
            subcat("ex73", "P1") | subcat("a2", "P1")

    def test06_mask(self):
        self.assertEqual(mask_of([0, 3]), 9)
        self.assertEqual(subcat("ex73", "P1+P2").mask, 9)
        self.assertEqual(subcat("ex73", "P1+P2").to_dict(), {"mask": 9, "labels": ["P1", "P2"]})

    def test07_catalog_size(self):
        check_catalog_size(self.cat)
        with self.assertRaises(GuardExceededError):
            check_catalog_size(self.cat, limit=4)

    def test08_verdict(self):
        self.assertTrue(Verdict(True))
        self.assertFalse(Verdict(False, "witness"))


if __name__ == '__main__':
    unittest.main()
