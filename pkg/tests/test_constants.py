import unittest
import nfoldlib.constants as c


class TestConstants(unittest.TestCase):
    def test01_content(self):
        """ Test if module constant include corresponding variables """
        for name in ("DEFAULT_PRIME", "PATH_LENGTH_BOUND", "SUBMODULE_DIM_BOUND", "ISO_ENUM_GUARD",
                     "ISO_SAMPLE_BUDGET", "EXT_DIM_GUARD", "MU", "SUBSET_GUARD", "HOM_ENUM_GUARD", "SEED",
                     "SCHEMA", "THREADS_ENV"):
            self.assertTrue(hasattr(c, name), msg=name)

    def test02_defaults(self):
        """ Test documented default values """
        self.assertEqual(c.DEFAULT_PRIME, 2)
        self.assertEqual(c.MU, 2)
        self.assertEqual(c.EXT_DIM_GUARD, 12)
        self.assertEqual(c.SUBSET_GUARD, 2 ** 22)
        self.assertEqual(c.SCHEMA, "taufold.v1")
        self.assertEqual(c.THREADS_ENV, "TAUFOLD_THREADS")

    def test03_mask_width(self):
        """ Test that catalog masks fit in uint64 """
        self.assertLessEqual(c.MAX_CATALOG, 64)


if __name__ == '__main__':
    unittest.main()
