import unittest
import numpy as np
from nfoldlib.errors import UnsupportedAlgebraError
from nfoldlib.quiverlang import linear_a
from nfoldlib.stringindec import build_catalog, audit_catalog
from tests.helpers import TestHelpers, algebra, catalog


class TestBuildCatalog(unittest.TestCase, TestHelpers):

    def test01_example_labels(self):
        cat = catalog("ex73")
        self.assertEqual(cat.labels, ["P1", "S2", "S3", "P2", "P3"])
        self.assertEqual([X.dims for X in cat.indecs], [(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 0), (0, 1, 1)])

    def test02_counts(self):
        expected = {"point": 1, "a2": 3, "a3": 6, "a4": 10, "nak3": 5, "nak4": 7}
        for name, count in expected.items():
            self.assertEqual(len(catalog(name)), count, msg=name)

    def test03_hereditary_labels(self):
        self.assertEqual(catalog("a3").labels, ["P1", "S2", "S3", "P2", "I2", "P3"])

    def test04_tables(self):
        cat = catalog("ex73")
        self.assertEqual(cat.tau_of, [None, 0, 1, None, None])
        self.assertEqual(cat.projectives, [0, 3, 4])
        self.assertTrue(cat.is_projective(3))
        self.assertFalse(cat.is_projective(1))
        self.assertEqual(cat.ext1_dims[1, 0], 1)
        self.assertEqual(cat.ext1_dims[2, 1], 1)
        self.assertEqual(int(cat.ext1_dims.sum()), 2)
        np.testing.assert_array_equal(np.diag(cat.hom_dims), [1, 1, 1, 1, 1])
        self.assertEqual(cat.hom_dims[cat.index("P2"), cat.index("P3")], 1)

    def test05_index(self):
        cat = catalog("ex73")
        self.assertEqual(cat.index("S3"), 2)
        with self.assertRaises(ValueError):
            cat.index("P9")

    def test06_band_rejected(self):
        with self.assertRaises(UnsupportedAlgebraError):
            build_catalog(algebra("kronecker"))

    def test07_audit(self):
        self.assertEqual(audit_catalog(catalog("ex73")), 4)
        self.assertEqual(audit_catalog(catalog("point")), 0)

    def test08_to_dict(self):
        d = catalog("a2").to_dict()
        self.assertEqual(d["labels"], ["P1", "S2", "P2"])
        self.assertEqual(d["tau_of"], [None, 0, None])
        self.assertEqual(d["ext1_dims"], [[0, 0, 0], [1, 0, 0], [0, 0, 0]])

    def test09_seed(self):
        cat = build_catalog(linear_a(2), seed=7)
        self.assertEqual(cat.labels, ["P1", "S2", "P2"])

    def test10_memo(self):
        cat = catalog("a2")
        calls = []
        first = cat.memo(("memo_key",), lambda: calls.append(1) or 5)
        second = cat.memo(("memo_key",), lambda: calls.append(1) or 6)
        self.assertEqual((first, second, len(calls)), (5, 5, 1))


if __name__ == '__main__':
    unittest.main()
