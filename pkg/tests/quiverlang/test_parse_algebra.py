import unittest
from nfoldlib.errors import AlgebraParseError, UnsupportedAlgebraError
from nfoldlib.quiverlang import parse_algebra, format_algebra, load_algebra, bundled_algebras


class TestParseAlgebra(unittest.TestCase):

    def test01_bundled(self):
        names = bundled_algebras()
        for name in ("a2", "a3", "a4", "ex73", "kronecker", "nak3", "nak4", "point"):
            self.assertIn(name, names)

    def test02_dimensions(self):
        self.assertEqual(load_algebra("point").dim, 1)
        self.assertEqual(load_algebra("a2").dim, 3)
        self.assertEqual(load_algebra("ex73").dim, 5)
        self.assertEqual(load_algebra("a4").dim, 10)
        self.assertEqual(load_algebra("nak4").dim, 7)

    def test03_path_basis_order(self):
        A = load_algebra("ex73")
        self.assertEqual([str(q) for q in A.path_basis], ["e1", "e2", "e3", "a", "b"])
        self.assertEqual(A.p, 2)
        self.assertEqual(A.max_path_length, 1)

    def test04_comments_and_default_field(self):
        A = parse_algebra("# two vertices\nvertex 1   # sink\nvertex 2\n\narrow b : 2 -> 1\n")
        self.assertEqual(A.vertices, ("1", "2"))
        self.assertEqual(A.dim, 3)

    def test05_unknown_vertex_position(self):
        with self.assertRaises(AlgebraParseError) as ctx:
            parse_algebra("vertex 1\narrow x : 1 -> 9\n")
        self.assertEqual(ctx.exception.line, 2)
        self.assertEqual(ctx.exception.column, 16)
        self.assertTrue(str(ctx.exception).startswith("line 2, column 16"))

    def test06_unknown_arrow_in_relation(self):
        text = "vertex 1\nvertex 2\narrow a : 2 -> 1\nrelation a*z\n"
        with self.assertRaises(AlgebraParseError) as ctx:
            parse_algebra(text)
        self.assertEqual((ctx.exception.line, ctx.exception.column), (4, 12))

    def test07_syntax_errors(self):
        bad = [
            "vertex 1\nvertex 1\n",
            "vertex 1\nfield 4x\n",
            "vertex 1\nfield 2\nfield 3\n",
            "vertex 1\nloop 1\n",
            "vertex 1\nvertex 2\narrow a 2 -> 1\n",
            "vertex 1\nvertex 2\narrow a : 2 -> 1\narrow b : 1 -> 2\nrelation a*a\n",
            "vertex 1\nvertex 2\narrow a : 2 -> 1\nrelation a\n",
            "",
        ]
        for text in bad:
            with self.assertRaises(AlgebraParseError, msg=text):
                parse_algebra(text)

    def test08_composite_field_rejected(self):
        with self.assertRaises(AlgebraParseError):
            parse_algebra("field 4\nvertex 1\n")

    def test09_non_admissible(self):
        with self.assertRaises(UnsupportedAlgebraError):
            parse_algebra("vertex 1\narrow x : 1 -> 1\n")

    def test10_format_round_trip(self):
        A = load_algebra("ex73")
        self.assertEqual(parse_algebra(format_algebra(A)), A)

    def test11_missing_file(self):
        with self.assertRaises(FileNotFoundError):
            load_algebra("/nonexistent/algebra.alg")


if __name__ == '__main__':
    unittest.main()
