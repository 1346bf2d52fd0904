import itertools
import unittest

from hypothesis import given
from hypothesis import strategies as st

from catkit import patterns
from catkit.errors import (
    InvalidPatternError,
    InvalidPermutationError,
    PreconditionError,
    UnknownFamilyError,
)
from catkit.patterns import Family, JVariant, Permutation, VincularPattern


def perm(text: str) -> Permutation:
    return Permutation.parse(text)


def count_by_brute_force(values, adjacent) -> int:
    """Occurrences of 123 with the given adjacencies, by checking every triple"""
    count = 0
    for i, j, k in itertools.combinations(range(len(values)), 3):
        if 1 in adjacent and j != i + 1:
            continue
        if 2 in adjacent and k != j + 1:
            continue
        if values[i] < values[j] < values[k]:
            count += 1
    return count


class PermutationTestCase(unittest.TestCase):
    def test_parse_and_format(self):
        self.assertEqual(perm("34215").ranks, (3, 4, 2, 1, 5))
        self.assertEqual(str(perm("34215")), "34215")

        long = perm("1,10,2,3,4,5,6,7,8,9")
        self.assertEqual(len(long), 10)
        self.assertEqual(str(long), "1,10,2,3,4,5,6,7,8,9")

        with self.assertRaises(InvalidPermutationError):
            perm("112")
        with self.assertRaises(InvalidPermutationError):
            perm("1a")

    def test_pattern_parse(self):
        self.assertEqual(VincularPattern.parse("1-23"), patterns.PATTERN_1_23)
        self.assertEqual(VincularPattern.parse("12-3"), patterns.PATTERN_12_3)
        self.assertEqual(VincularPattern.parse("1-2-3"), patterns.PATTERN_1_2_3)
        self.assertEqual(str(patterns.PATTERN_12_3), "12-3")

        with self.assertRaises(InvalidPatternError):
            VincularPattern.parse("1-x")
        with self.assertRaises(InvalidPatternError):
            VincularPattern.parse("1-1")

    def test_occurrences(self):
        self.assertEqual(patterns.occurrences(perm("34215"), patterns.PATTERN_1_2_3), 1)
        self.assertEqual(patterns.occurrences(perm("123"), patterns.PATTERN_1_2_3), 1)

        # 145, 125 and 123; only 125 has its last two entries adjacent
        self.assertEqual(patterns.occurrences(perm("14253"), patterns.PATTERN_1_2_3), 3)
        self.assertEqual(patterns.occurrences(perm("14253"), patterns.PATTERN_1_23), 1)
        self.assertEqual(patterns.occurrences(perm("14253"), patterns.PATTERN_12_3), 1)

        # Patterns other than 123 take the generic path
        self.assertEqual(patterns.occurrences(perm("132"), VincularPattern((1, 3, 2))), 1)
        self.assertEqual(patterns.occurrences(perm("12"), patterns.PATTERN_1_2_3), 0)

    def test_ends_in_descent(self):
        self.assertTrue(patterns.ends_in_descent(perm("21")))
        self.assertTrue(patterns.ends_in_descent(perm("132")))
        self.assertFalse(patterns.ends_in_descent(perm("213")))
        with self.assertRaises(PreconditionError):
            patterns.ends_in_descent(perm("1"))


class FamilyTestCase(unittest.TestCase):
    def test_lookup(self):
        self.assertIs(Family.lookup("t9"), Family.T9)
        with self.assertRaises(UnknownFamilyError):
            Family.lookup("T12")

    def test_enumerate_family(self):
        self.assertEqual(
            [str(member) for member in patterns.enumerate_family(3, Family.T7)],
            ["132", "231", "321"],
        )
        self.assertEqual(patterns.enumerate_family(3, Family.T9), [perm("123")])
        self.assertEqual(len(patterns.enumerate_family(4, Family.T9)), 6)

    def test_pruned_generation_matches_filter(self):
        for n in range(7):
            for family in Family:
                self.assertEqual(
                    patterns.enumerate_family(n, family),
                    patterns.filter_symmetric_group(n, family),
                )

    def test_counts(self):
        self.assertEqual(patterns.a_count(3), 3)
        self.assertEqual(patterns.c_count(4), 6)
        self.assertEqual(patterns.f_count(5), 1)
        self.assertEqual(
            [patterns.a_count(n) for n in range(2, 9)], [1, 3, 9, 28, 90, 297, 1001]
        )

    def test_counts_match_enumeration(self):
        for n in range(8):
            for family in Family:
                self.assertEqual(
                    len(patterns.enumerate_family(n, family)),
                    patterns.family_count(family, n),
                    f"{family.value} at n={n}",
                )

    def test_enumerate_avoiders(self):
        self.assertEqual(
            patterns.enumerate_avoiders([2, 4, 6]),
            [(2, 6, 4), (4, 2, 6), (4, 6, 2), (6, 2, 4), (6, 4, 2)],
        )


class BijectionTestCase(unittest.TestCase):
    def test_theta(self):
        self.assertEqual(patterns.theta(perm("123")), (perm("231"), 2))
        self.assertEqual(patterns.theta_inverse(perm("231"), 2), perm("123"))

        # 132 has no (1-2-3) at all
        with self.assertRaises(PreconditionError):
            patterns.theta(perm("132"))

    def test_theta_images_share_permutations_across_b(self):
        # Distinct members of T8 may land on the same permutation in J classes
        # with different split values
        self.assertEqual(patterns.theta(perm("24531")), (perm("45231"), 4))
        self.assertEqual(patterns.theta(perm("45123")), (perm("45231"), 2))
        self.assertEqual(patterns.theta_inverse(perm("45231"), 4), perm("24531"))
        self.assertEqual(patterns.theta_inverse(perm("45231"), 2), perm("45123"))

    def test_tau(self):
        self.assertEqual(patterns.tau(perm("123")), (perm("3412"), 2))
        self.assertEqual(patterns.tau_inverse(perm("3412"), 2), perm("123"))

        with self.assertRaises(PreconditionError):
            patterns.tau_inverse(perm("3412"), 1)

    def test_is_in_J(self):
        self.assertTrue(patterns.is_in_J(perm("231"), 2, JVariant.J))
        self.assertTrue(patterns.is_in_J(perm("3412"), 2, JVariant.J1))
        # b = 1 leaves R empty
        self.assertFalse(patterns.is_in_J(perm("231"), 1, JVariant.J))
        # 3 is rightmost in L = 43
        self.assertFalse(patterns.is_in_J(perm("4312"), 2, JVariant.J1))

    def test_theta_image_is_the_J_classes(self):
        for n in range(7):
            images = {patterns.theta(member) for member in patterns.enumerate_family(n, Family.T8)}
            expected = {
                (member, b)
                for b in range(1, n + 1)
                for member in patterns.enumerate_J(n, b, JVariant.J)
            }
            self.assertEqual(images, expected)

    def test_tau_image_is_the_J_classes(self):
        targets = {Family.T9: JVariant.J1, Family.T10: JVariant.J2, Family.T11: JVariant.J3}
        for family, variant in targets.items():
            for n in range(7):
                images = {patterns.tau(member) for member in patterns.enumerate_family(n, family)}
                expected = {
                    (member, b)
                    for b in range(1, n + 2)
                    for member in patterns.enumerate_J(n + 1, b, variant)
                }
                self.assertEqual(images, expected, f"{family.value} at n={n}")


class SplitSumTestCase(unittest.TestCase):
    def test_split_sums_match_counts(self):
        for n in range(16):
            self.assertEqual(patterns.split_sum(JVariant.J, n), patterns.b_count(n))
            self.assertEqual(patterns.split_sum(JVariant.J1, n), patterns.c_count(n))
            self.assertEqual(patterns.split_sum(JVariant.J2, n), patterns.d_count(n))
            self.assertEqual(patterns.split_sum(JVariant.J3, n), patterns.f_count(n))

    def test_t7_is_a_catalan_difference(self):
        for n in range(2, 16):
            self.assertEqual(
                patterns.a_count(n), patterns.catalan(n) - patterns.catalan(n - 1)
            )

    def test_displayed_sums(self):
        self.assertEqual(patterns.displayed_sum(JVariant.J2, 4), 0)
        self.assertEqual(patterns.displayed_sum(JVariant.J2, 5), 1)
        self.assertNotEqual(patterns.displayed_sum(JVariant.J2, 5), patterns.d_count(5))
        with self.assertRaises(ValueError):
            patterns.displayed_sum(JVariant.J, 5)


class PatternPropertyTestCase(unittest.TestCase):
    @given(st.integers(min_value=0, max_value=8).flatmap(
        lambda n: st.permutations(range(1, n + 1))
    ))
    def test_occurrence_counts(self, ranks):
        values = tuple(ranks)
        permutation = Permutation(values)
        classical = patterns.occurrences(permutation, patterns.PATTERN_1_2_3)
        self.assertEqual(classical, count_by_brute_force(values, set()))
        for pattern in (patterns.PATTERN_1_23, patterns.PATTERN_12_3):
            found = patterns.occurrences(permutation, pattern)
            self.assertEqual(found, count_by_brute_force(values, pattern.adjacent))
            self.assertLessEqual(found, classical)

    @given(st.integers(min_value=3, max_value=6).flatmap(
        lambda n: st.sampled_from(patterns.enumerate_family(n, Family.T9))
    ))
    def test_tau_round_trip(self, member):
        image, b = patterns.tau(member)
        self.assertEqual(len(image), len(member) + 1)
        self.assertEqual(patterns.tau_inverse(image, b), member)


if __name__ == "__main__":
    unittest.main()
