import unittest
from nfoldlib.quiverlang import linear_a
from nfoldlib.stringindec import build_catalog
from nfoldlib.taufold import verify_bijection, pairing_table
from tests.helpers import TestHelpers, catalog


class TestVerifyBijection(unittest.TestCase):

    def test01_air(self):
        report = verify_bijection(catalog("ex73"), "air")
        self.assertTrue(report.ok, msg=report.failures)
        self.assertEqual(report.counts, {"stt": 12, "tors": 12})
        self.assertEqual(len(report.forward), 12)

    def test02_main(self):
        report = verify_bijection(catalog("ex73"), "main")
        self.assertTrue(report.ok, msg=report.failures)
        self.assertEqual(len(report.forward), 16)
        self.assertEqual(len(report.backward), 16)
        self.assertEqual(list(report.excluded), ["add(S3+P2)"])
        self.assertEqual(report.summary(), "main: 16 ↔ 16, round-trips OK, excluded: add(S3+P2)")

    def test03_threads(self):
        single = verify_bijection(catalog("ex73"), "main", workers=1)
        pooled = verify_bijection(catalog("ex73"), "main", workers=4)
        self.assertEqual(single.to_dict(), pooled.to_dict())

    def test04_hereditary(self):
        for cat in (catalog("a2"), build_catalog(linear_a(3))):
            report = verify_bijection(cat, "hereditary")
            self.assertTrue(report.ok, msg=report.failures)
            self.assertEqual(len(report.forward), len(report.backward))

    def test05_hereditary_needs_global_dimension_one(self):
        with self.assertRaises(ValueError):
            verify_bijection(catalog("ex73"), "hereditary")

    def test06_unknown(self):
        with self.assertRaises(ValueError):
            verify_bijection(catalog("ex73"), "dual")

    def test07_air_counts(self):
        for name, count in (("a2", 5), ("nak4", 29)):
            report = verify_bijection(catalog(name), "air")
            self.assertTrue(report.ok, msg=report.failures)
            self.assertEqual(report.counts, {"stt": count, "tors": count})
            self.assertEqual(report.summary(), f"air: {count} ↔ {count}, round-trips OK")

    def test08_main_on_a2(self):
        report = verify_bijection(catalog("a2"), "main")
        self.assertTrue(report.ok, msg=report.failures)
        self.assertEqual(report.counts["tau_rigid"], 6)
        self.assertEqual((len(report.forward), len(report.backward)), (6, 6))
        self.assertTrue(report.summary().startswith("main: 6 ↔ 6, round-trips OK"))

    def test09_hereditary_on_a4(self):
        report = verify_bijection(catalog("a4"), "hereditary")
        self.assertTrue(report.ok, msg=report.failures)
        self.assertEqual(report.counts["rigid"], 90)
        self.assertEqual((len(report.forward), len(report.backward)), (90, 90))
        self.assertTrue(report.summary().startswith("hereditary: 90 ↔ 90, round-trips OK"))


class TestPairingTable(unittest.TestCase):

    def test01_rows(self):
        table = pairing_table(catalog("ex73"))
        self.assertEqual(len(table.rows), 16)
        self.assertIn(("P1+P2", "add(P1+S2+P2)"), table.rows)
        self.assertIn(("P2", "add(P2)"), table.rows)

    def test02_extra(self):
        table = pairing_table(catalog("ex73"))
        self.assertEqual(table.extra, [{"class": "add(S3+P2)", "t1": "add(S2+S3+P2+P3)", "p_t1": "S2+P2+P3",
                                        "witness": ("S3", "P3")}])
        self.assertIn("two-fold torsion classes outside the image:", table.to_text())
        self.assertEqual(table.to_dict()["extra"][0]["witness"], ["S3", "P3"])


if __name__ == '__main__':
    unittest.main()
