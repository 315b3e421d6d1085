import unittest
import numpy as np
from nfoldlib.exactmat import rref, rank, row_space, kernel_basis, solve


class TestRref(unittest.TestCase):

    def test01_rref_f2(self):
        r, k, pivots = rref([[1, 1], [1, 1]], 2)
        np.testing.assert_array_equal(r, [[1, 1], [0, 0]])
        self.assertEqual(k, 1)
        self.assertEqual(pivots, [0])

    def test02_rref_f3(self):
        r, k, pivots = rref([[2, 1], [1, 2]], 3)
        np.testing.assert_array_equal(r, [[1, 2], [0, 0]])
        self.assertEqual(k, 1)

    def test03_full_rank(self):
        r, k, pivots = rref([[0, 1], [1, 0]], 5)
        np.testing.assert_array_equal(r, np.eye(2, dtype=np.int64))
        self.assertEqual(pivots, [0, 1])

    def test04_rank_empty(self):
        self.assertEqual(rank([], 2), 0)
        self.assertEqual(rank(np.zeros((0, 3), dtype=np.int64), 2), 0)

    def test05_row_space(self):
        np.testing.assert_array_equal(row_space([[1, 0, 1], [1, 0, 1], [0, 1, 1]], 2), [[1, 0, 1], [0, 1, 1]])

    def test06_entries_reduced(self):
        r, _, _ = rref([[-1, 4]], 3)
        np.testing.assert_array_equal(r, [[1, 2]])

    def test07_not_2d(self):
        with self.assertRaises(ValueError):
            rref(np.zeros((2, 2, 2)), 2)


class TestKernelBasis(unittest.TestCase):

    def test01_example(self):
        np.testing.assert_array_equal(kernel_basis([[1, 1, 0], [0, 1, 1]], 2), [[1, 1, 1]])

    def test02_zero_matrix(self):
        np.testing.assert_array_equal(kernel_basis(np.zeros((1, 2), dtype=np.int64), 3), np.eye(2, dtype=np.int64))

    def test03_kernel_is_annihilated(self):
        m = np.array([[1, 2, 0, 1], [0, 1, 1, 2]])
        basis = kernel_basis(m, 3)
        self.assertEqual(basis.shape, (2, 4))
        np.testing.assert_array_equal((m @ basis.T) % 3, np.zeros((2, 2), dtype=np.int64))


class TestSolve(unittest.TestCase):

    def test01_identity(self):
        np.testing.assert_array_equal(solve([[1, 0], [0, 1]], [1, 1], 2), [1, 1])

    def test02_inconsistent(self):
        self.assertIsNone(solve([[1, 1], [1, 1]], [0, 1], 2))

    def test03_free_variables_zero(self):
        np.testing.assert_array_equal(solve([[1, 1]], [1], 2), [1, 0])

    def test04_shape_mismatch(self):
        with self.assertRaises(ValueError):
            solve([[1, 0]], [1, 1], 2)


if __name__ == '__main__':
    unittest.main()
