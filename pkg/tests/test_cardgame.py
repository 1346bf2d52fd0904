import unittest
from fractions import Fraction

from hypothesis import assume, given
from hypothesis import strategies as st

from catkit import cardgame
from catkit.cardgame import Deck, Walk
from catkit.dyck import DyckPath, is_member_D
from catkit.errors import GuardExceededError, InvalidDeckError, PreconditionError
from catkit.exactnum import binomial, class_count


class DeckTestCase(unittest.TestCase):
    def test_deck_validation(self):
        self.assertEqual(Deck("RRBB").n, 2)
        with self.assertRaises(InvalidDeckError):
            Deck("RRB")
        with self.assertRaises(InvalidDeckError):
            Deck("RX")
        with self.assertRaises(PreconditionError):
            Walk((1, 1))

    def test_deck_to_walk(self):
        self.assertEqual(cardgame.deck_to_walk(Deck("RB")).steps, (1, -1))
        self.assertEqual(cardgame.deck_to_walk(Deck("BR")).steps, (-1, 1))
        self.assertEqual(cardgame.deck_to_walk(Deck("RRBB")).steps, (1, 1, -1, -1))

    def test_max_prefix_score(self):
        self.assertEqual(cardgame.max_prefix_score(Deck("RRBB")), 2)
        self.assertEqual(cardgame.max_prefix_score(Deck("BRBR")), 0)
        self.assertEqual(cardgame.max_prefix_score(Deck("RBBR")), 1)

    def test_enumerate_decks(self):
        self.assertEqual(
            [str(deck) for deck in cardgame.enumerate_decks(2)],
            ["RRBB", "RBRB", "RBBR", "BRRB", "BRBR", "BBRR"],
        )
        self.assertEqual(len(list(cardgame.enumerate_decks(5))), binomial(10, 5))


class CountTestCase(unittest.TestCase):
    def test_p_exact_count(self):
        self.assertEqual(cardgame.p_exact_count(2, 2), 1)
        self.assertEqual(cardgame.p_exact_count(1, 2), 3)
        self.assertEqual(cardgame.p_exact_count(0, 2), 2)
        with self.assertRaises(PreconditionError):
            cardgame.p_exact_count(3, 2)

    def test_histogram(self):
        self.assertEqual(cardgame.score_histogram(1), {0: 1, 1: 1})
        self.assertEqual(cardgame.score_histogram(2), {0: 2, 1: 3, 2: 1})
        with self.assertRaises(GuardExceededError):
            cardgame.score_histogram(4, bound=3)

    def test_histogram_matches_formula(self):
        for n in range(7):
            histogram = cardgame.score_histogram(n)
            for r in range(n + 1):
                self.assertEqual(histogram[r], cardgame.p_exact_count(r, n))
                self.assertEqual(cardgame.p_exact_count(r, n), class_count(2 * r, n + r))


class WalkTestCase(unittest.TestCase):
    def test_walk_to_bounded_dyck(self):
        walk = cardgame.deck_to_walk(Deck("RBRB"))
        path = cardgame.walk_to_bounded_dyck(walk, 1)
        self.assertEqual(path, DyckPath("ududud"))
        self.assertEqual(path.semilength, 3)
        self.assertTrue(is_member_D(path, 1, 1))
        self.assertEqual(cardgame.bounded_dyck_to_walk(path, 1), walk)

    def test_walk_preconditions(self):
        walk = cardgame.deck_to_walk(Deck("RBRB"))
        with self.assertRaises(PreconditionError):
            cardgame.walk_to_bounded_dyck(walk, 2)
        with self.assertRaises(PreconditionError):
            cardgame.walk_to_bounded_dyck(cardgame.deck_to_walk(Deck("BR")), 0)
        with self.assertRaises(PreconditionError):
            cardgame.bounded_dyck_to_walk(DyckPath("uudd"), 1)

    @given(st.integers(min_value=1, max_value=8).flatmap(
        lambda n: st.permutations("R" * n + "B" * n)
    ))
    def test_round_trip(self, cards):
        deck = Deck("".join(cards))
        r = cardgame.max_prefix_score(deck)
        assume(r >= 1)
        walk = cardgame.deck_to_walk(deck)
        path = cardgame.walk_to_bounded_dyck(walk, r)
        self.assertEqual(path.semilength, deck.n + r)
        self.assertTrue(is_member_D(path, r, r))
        self.assertEqual(cardgame.bounded_dyck_to_walk(path, r), walk)


class ExpectationTestCase(unittest.TestCase):
    def test_reach_probability(self):
        self.assertEqual(cardgame.reach_probability(1, 1), Fraction(1, 2))
        self.assertEqual(cardgame.reach_probability(1, 2), Fraction(2, 3))
        for n in range(1, 9):
            self.assertEqual(
                cardgame.reach_probability(n, n), Fraction(1, binomial(2 * n, n))
            )
        with self.assertRaises(PreconditionError):
            cardgame.reach_probability(0, 2)

    def test_reflection(self):
        for n in range(1, 13):
            for r in range(1, n + 1):
                self.assertEqual(
                    cardgame.reach_probability(r, n),
                    cardgame.reach_probability_by_reflection(r, n),
                )

    def test_expected_score(self):
        self.assertEqual(cardgame.expected_score(1, 1), Fraction(1, 2))
        self.assertEqual(cardgame.expected_score(2, 2), Fraction(1, 3))
        self.assertEqual(cardgame.expected_score(1, 2), Fraction(2, 3))
        self.assertEqual(
            cardgame.expected_scores(2), {1: Fraction(2, 3), 2: Fraction(1, 3)}
        )

    def test_strategy_expectation(self):
        for n in range(1, 6):
            for r in range(1, n + 1):
                self.assertEqual(
                    cardgame.strategy_expectation(r, n), cardgame.expected_score(r, n)
                )

    def test_optimal_r(self):
        self.assertEqual(cardgame.optimal_r(1), 1)
        self.assertEqual(cardgame.optimal_r(5), 2)
        self.assertEqual(cardgame.optimal_r(13), 3)
        self.assertEqual(
            [cardgame.optimal_r(n) for n in range(1, 26)],
            [1] * 4 + [2] * 8 + [3] * 12 + [4],
        )

    def test_conjecture_r(self):
        for n, expected in ((4, 1), (5, 2), (12, 2), (24, 3), (25, 4)):
            self.assertEqual(cardgame.conjecture_r(n), expected)
        for n in range(1, 61):
            self.assertEqual(cardgame.optimal_r(n), cardgame.conjecture_r(n))

    def test_ties(self):
        self.assertEqual(cardgame.tie_points(40), [4, 12, 24, 40])
        self.assertEqual(cardgame.expected_score(1, 4), Fraction(4, 5))
        self.assertEqual(cardgame.expected_score(2, 4), Fraction(4, 5))

        with self.assertLogs("catkit.cardgame", level="INFO") as logs:
            self.assertEqual(cardgame.optimal_r(4), 1)
        self.assertIn("tie", logs.output[0])


if __name__ == "__main__":
    unittest.main()
