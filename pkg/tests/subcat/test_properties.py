import unittest
import numpy as np
from nfoldlib import constants
from nfoldlib.subcat import Subcat, ke_ce_closure, torsion_closure
from tests.helpers import TestHelpers, catalog

SAMPLES = 200


def random_subcats(cat, count, seed=constants.SEED):
    """Uniformly drawn subcategories of a catalog, repeats allowed."""
    rng = np.random.default_rng(seed)
    return [Subcat(cat, int(rng.integers(0, 1 << len(cat)))) for _ in range(count)]


class TestClosureProperties(unittest.TestCase, TestHelpers):

    def setUp(self):
        self.cat = catalog("nak4")

    def test01_ke_is_two_fold_torsion_free_closure(self):
        for X in random_subcats(self.cat, SAMPLES):
            self.assertEqual(ke_ce_closure(X, "ke").result, torsion_closure(X, 2, "torf"), msg=X.label())

    def test02_ce_is_two_fold_torsion_closure(self):
        for X in random_subcats(self.cat, SAMPLES, seed=constants.SEED + 1):
            self.assertEqual(ke_ce_closure(X, "ce").result, torsion_closure(X, 2, "tors"), msg=X.label())

    def test03_closures_contain_the_generators(self):
        for X in random_subcats(self.cat, SAMPLES, seed=constants.SEED + 2):
            for side in ("tors", "torf"):
                closure = torsion_closure(X, 2, side)
                self.assertEqual(closure.mask & X.mask, X.mask, msg=X.label())
                self.assertEqual(torsion_closure(closure, 2, side), closure, msg=X.label())


if __name__ == '__main__':
    unittest.main()
