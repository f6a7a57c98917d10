import unittest

from cyinertia.algebra import Field
from cyinertia.errors import InvalidFieldError, InvalidPointError, PreconditionError
from cyinertia.geometry import Point
from cyinertia.utils import (
    format_pair,
    parse_coordinate,
    parse_point,
    validate_count,
    validate_field,
)


class TestPointParsing(unittest.TestCase):
    def setUp(self):
        self.Q = Field.rationals()
        self.F7 = Field.prime(7)

    def test_affine_coordinates(self):
        point = parse_point("1, -1/2, 3", self.Q, 3)
        self.assertEqual(point, Point.affine(self.Q, [1, self.Q("-1/2"), 3]))
        self.assertEqual(point.format(), "(1, -1/2, 3)")

    def test_pairs_and_infinity(self):
        point = parse_point("[0:1],inf,[2:4]", self.F7, 3)
        self.assertTrue(point.is_infinite(1))
        self.assertTrue(point.is_infinite(2))
        self.assertEqual(point.affine_value(3), self.F7(2))
        self.assertEqual(format_pair(point, 3), "[2:4]")
        self.assertEqual(point.format(), "([0:1], [0:1], 2)")

    def test_residues_reduce(self):
        self.assertEqual(parse_coordinate("8", self.F7), (self.F7(1), self.F7(1)))
        self.assertEqual(parse_coordinate("1/2", self.F7)[1], self.F7(4))

    def test_projective_equality(self):
        a = parse_point("[2:4],1", self.Q, 2)
        b = parse_point("2,[3:3]", self.Q, 2)
        self.assertTrue(a.projectively_equal(b))
        self.assertNotEqual(a, b)
        self.assertFalse(a.projectively_equal(parse_point("2,2", self.Q, 2)))

    def test_invalid_points(self):
        for text in ("", "1", "1,2,3", "[0:0],1", "a,1", "[1:2:3],1", "1/0,1"):
            with self.subTest(text=text):
                with self.assertRaises(InvalidPointError):
                    parse_point(text, self.Q, 2)
        with self.assertRaises(InvalidPointError):
            parse_point("1/7,1", self.F7, 2)


class TestValidation(unittest.TestCase):
    def test_validate_field(self):
        self.assertTrue(validate_field("Q").is_rational)
        self.assertEqual(validate_field("Fp:11").characteristic, 11)
        with self.assertRaises(InvalidFieldError):
            validate_field("Fp:15")
        with self.assertRaises(InvalidFieldError):
            validate_field(7)

    def test_validate_count(self):
        self.assertEqual(validate_count("--trials", 5), 5)
        self.assertEqual(validate_count("--seed", 0, minimum=0), 0)
        for bad in (0, -1, True, "3", 1.5):
            with self.subTest(bad=bad):
                with self.assertRaises(PreconditionError):
                    validate_count("--trials", bad)


if __name__ == "__main__":
    unittest.main()
