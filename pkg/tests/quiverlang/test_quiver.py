import unittest
from nfoldlib.errors import UnsupportedAlgebraError
from nfoldlib.quiverlang import (Arrow, Path, Quiver, BoundQuiverAlgebra, linear_a, opposite, load_algebra,
                                 validate_string_algebra)


class TestQuiver(unittest.TestCase):

    def test01_duplicates(self):
        with self.assertRaises(ValueError):
            Quiver(["1", "1"], [])
        with self.assertRaises(ValueError):
            Quiver(["1", "2"], [Arrow("a", "2", "1"), Arrow("a", "1", "2")])
        with self.assertRaises(ValueError):
            Quiver(["1"], [Arrow("a", "2", "1")])

    def test02_relation_checks(self):
        Q = Quiver(["1", "2", "3"], [Arrow("a", "3", "2"), Arrow("b", "2", "1")])
        with self.assertRaises(ValueError):
            BoundQuiverAlgebra(Q, [("b", "a")])
        with self.assertRaises(ValueError):
            BoundQuiverAlgebra(Q, [("a",)])
        self.assertEqual(BoundQuiverAlgebra(Q, [("a", "b")]).dim, 5)

    def test03_extend(self):
        A = load_algebra("ex73")
        self.assertIsNone(A.extend(Path("3", "2", ("a",)), "b"))
        self.assertIsNone(A.extend(Path("1", "1"), "a"))
        self.assertEqual(A.extend(Path("3", "3"), "a"), Path("3", "2", ("a",)))
        self.assertTrue(A.contains_relation(("a", "b")))

    def test04_paths_from(self):
        A = linear_a(3)
        self.assertEqual(len(A.paths_from("3")), 3)
        self.assertEqual(len(A.paths_to("1")), 3)
        self.assertEqual([str(q) for q in A.paths_from("3", target="1")], ["a2*a1"])


class TestLinearA(unittest.TestCase):

    def test01_dimensions(self):
        self.assertEqual(linear_a(1).dim, 1)
        self.assertEqual(linear_a(4).dim, 10)
        self.assertEqual(linear_a(4, radical_square_zero=True).dim, 7)
        self.assertEqual(linear_a(5, radical_square_zero=True).max_path_length, 1)

    def test02_orientation(self):
        A = linear_a(3)
        self.assertEqual(A.quiver.arrow("a1"), Arrow("a1", "2", "1"))
        self.assertEqual(A.quiver.arrow("a2"), Arrow("a2", "3", "2"))

    def test03_bad_size(self):
        with self.assertRaises(ValueError):
            linear_a(0)


class TestOpposite(unittest.TestCase):

    def test01_involution(self):
        A = load_algebra("ex73")
        self.assertEqual(opposite(opposite(A)), A)
        self.assertNotEqual(opposite(A), A)

    def test02_reversed(self):
        B = opposite(load_algebra("ex73"))
        self.assertEqual(B.quiver.arrow("a"), Arrow("a", "2", "3"))
        self.assertEqual(B.relations, (("b", "a"),))
        self.assertEqual(B.dim, 5)


class TestValidateStringAlgebra(unittest.TestCase):

    def test01_certificate(self):
        cert = validate_string_algebra(linear_a(3))
        self.assertEqual(cert.successor, {"a1": None, "a2": "a1"})
        self.assertEqual(cert.predecessor, {"a1": "a2", "a2": None})
        self.assertEqual(cert.out_degree["3"], 1)

    def test02_zero_relation_cuts_successor(self):
        cert = validate_string_algebra(load_algebra("ex73"))
        self.assertIsNone(cert.successor["a"])
        self.assertIsNone(cert.predecessor["b"])

    def test03_too_many_arrows(self):
        Q = Quiver(["0", "1", "2", "3"], [Arrow("x", "0", "1"), Arrow("y", "0", "2"), Arrow("z", "0", "3")])
        with self.assertRaises(UnsupportedAlgebraError):
            validate_string_algebra(BoundQuiverAlgebra(Q))

    def test04_two_successors(self):
        Q = Quiver(["1", "2", "3", "4"], [Arrow("a", "1", "2"), Arrow("b", "2", "3"), Arrow("c", "2", "4")])
        with self.assertRaises(UnsupportedAlgebraError):
            validate_string_algebra(BoundQuiverAlgebra(Q))
        validate_string_algebra(BoundQuiverAlgebra(Q, [("a", "b")]))


if __name__ == '__main__':
    unittest.main()
