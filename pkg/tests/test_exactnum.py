import unittest
from fractions import Fraction

from hypothesis import given
from hypothesis import strategies as st

from catkit import exactnum
from catkit.errors import InexactDivisionError


class ExactNumTestCase(unittest.TestCase):
    def test_binomial(self):
        self.assertEqual(exactnum.binomial(4, 2), 6)
        self.assertEqual(exactnum.binomial(0, 0), 1)

        # Out of range arguments give 0 instead of raising
        self.assertEqual(exactnum.binomial(2, 3), 0)
        self.assertEqual(exactnum.binomial(5, -1), 0)

        with self.assertRaises(ValueError):
            exactnum.binomial(-1, 0)

    def test_catalan(self):
        self.assertEqual(exactnum.catalan(0), 1)
        self.assertEqual(exactnum.catalan(3), 5)
        self.assertEqual(exactnum.catalan(10), 16796)

    def test_class_count(self):
        self.assertEqual(exactnum.class_count(0, 3), 5)
        self.assertEqual(exactnum.class_count(2, 2), 1)
        self.assertEqual(exactnum.class_count(2, 4), 9)

        # n < d leaves nothing to count
        self.assertEqual(exactnum.class_count(5, 3), 0)

        self.assertEqual(exactnum.class_count(0, 0), 1)
        self.assertEqual(exactnum.class_count(1, 0), 0)

    def test_catalan_power_coeff(self):
        self.assertEqual(exactnum.catalan_power_coeff(1, 3), 5)
        self.assertEqual(exactnum.catalan_power_coeff(3, 0), 1)
        # 5 * C_2 + C(5, 2) * C_1^2
        self.assertEqual(exactnum.catalan_power_coeff(5, 2), 20)

    def test_series_catalan_power(self):
        self.assertEqual(exactnum.series_catalan_power(1, 4), [1, 1, 2, 5, 14])
        self.assertEqual(exactnum.series_catalan_power(2, 0), [1])
        self.assertEqual(
            exactnum.series_catalan_power(6, 5),
            [exactnum.catalan_power_coeff(6, m) for m in range(6)],
        )

    def test_exact_quotient(self):
        self.assertEqual(exactnum.exact_quotient(12, 4), 3)
        with self.assertRaises(InexactDivisionError):
            exactnum.exact_quotient(7, 2)

    def test_convolve(self):
        self.assertEqual(exactnum.convolve([1, 1], [1, 1], 2), [1, 2, 1])
        # Truncation drops everything above the order
        self.assertEqual(exactnum.convolve([1, 1], [1, 1], 1), [1, 2])

    def test_catalan_series(self):
        self.assertEqual(exactnum.catalan_series(5), [1, 1, 2, 5, 14, 42])
        self.assertTrue(exactnum.satisfies_catalan_equation(exactnum.catalan_series(20)))
        self.assertFalse(exactnum.satisfies_catalan_equation([1, 1, 2, 5, 15]))

    def test_exact_rational_is_fraction(self):
        self.assertIs(exactnum.ExactRational, Fraction)

    @given(st.integers(min_value=0, max_value=8), st.integers(min_value=0, max_value=25))
    def test_class_count_matches_power_coefficient(self, d, extra):
        n = d + extra
        self.assertEqual(
            exactnum.class_count(d, n), exactnum.catalan_power_coeff(d + 1, n - d)
        )


if __name__ == "__main__":
    unittest.main()
