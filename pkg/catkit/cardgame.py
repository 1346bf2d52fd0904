"""Exact analysis of the red/black stopping game.

A deck holds n red and n black cards. Drawing from the top, the score is
(reds - blacks) so far; the threshold strategy r stops as soon as the score
reaches r and is paid r, or is paid 0 if that never happens.
"""
import logging
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterator, List, Tuple

from catkit.dyck import DOWN, UP, DyckPath, is_member_D, max_height
from catkit.errors import GuardExceededError, InvalidDeckError, PreconditionError
from catkit.exactnum import ExactRational, Natural, binomial, exact_quotient

logger = logging.getLogger(__name__)

RED = "R"
BLACK = "B"

DEFAULT_DECK_BOUND = 10


@dataclass(frozen=True)
class Deck:
    """An arrangement of n red and n black cards, top card first."""

    cards: str

    def __post_init__(self):
        if set(self.cards) - {RED, BLACK}:
            raise InvalidDeckError(f"deck {self.cards!r} may only contain R and B")
        if self.cards.count(RED) != self.cards.count(BLACK):
            raise InvalidDeckError(
                f"deck {self.cards!r} has {self.cards.count(RED)} red and "
                f"{self.cards.count(BLACK)} black cards"
            )

    @property
    def n(self) -> int:
        return len(self.cards) // 2

    def __str__(self) -> str:
        return self.cards


@dataclass(frozen=True)
class Walk:
    """A balanced +1/-1 sequence. Unlike a Dyck path it may go below zero."""

    steps: Tuple[int, ...]

    def __post_init__(self):
        if set(self.steps) - {1, -1} or sum(self.steps) != 0:
            raise PreconditionError(f"{self.steps} is not a balanced +1/-1 walk")

    def as_text(self) -> str:
        return "".join(UP if step == 1 else DOWN for step in self.steps)


def deck_to_walk(deck: Deck) -> Walk:
    return Walk(tuple(1 if card == RED else -1 for card in deck.cards))


def max_prefix_score(deck: Deck) -> int:
    """Highest (reds - blacks) over all prefixes, the empty one included."""
    return max_height(deck_to_walk(deck).as_text())


def enumerate_decks(n: int) -> Iterator[Deck]:
    """All C(2n, n) decks, red-first lexicographic."""
    cards: List[str] = []

    def extend(reds: int, blacks: int) -> Iterator[Deck]:
        if not reds and not blacks:
            yield Deck("".join(cards))
            return
        for card, left in ((RED, reds), (BLACK, blacks)):
            if not left:
                continue
            cards.append(card)
            if card == RED:
                yield from extend(reds - 1, blacks)
            else:
                yield from extend(reds, blacks - 1)
            cards.pop()

    yield from extend(n, n)


def p_exact_count(r: int, n: int) -> Natural:
    """Decks of 2n cards whose highest score is exactly r: (2r+1)/(n+r+1) C(2n, n+r)."""
    if r < 0 or r > n:
        raise PreconditionError(f"need 0 <= r <= n, got r={r}, n={n}")
    return exact_quotient((2 * r + 1) * binomial(2 * n, n + r), n + r + 1)


def _flip(text: str) -> str:
    return "".join(DOWN if step == UP else UP for step in text)


def walk_to_bounded_dyck(walk: Walk, r: int) -> DyckPath:
    """Shift the walk down by r, reflect it and wrap it in r upsteps and r downsteps.

    The result is in D_{r,r} and has semilength len(walk)/2 + r.
    """
    if r < 1:
        raise PreconditionError(f"r must be at least 1, got {r}")
    text = walk.as_text()
    if max_height(text) != r:
        raise PreconditionError(f"walk {text} does not reach exactly height {r}")
    reflected = _flip(text)
    return DyckPath(UP * r + reflected + DOWN * r)


def bounded_dyck_to_walk(path: DyckPath, r: int) -> Walk:
    if r < 1 or not is_member_D(path, r, r):
        raise PreconditionError(f"path {path} is not in D_{{{r},{r}}}")
    inner = path.steps[r : len(path) - r]
    reflected = _flip(inner)
    return Walk(tuple(1 if step == UP else -1 for step in reflected))


def _check_threshold(r: int, n: int) -> None:
    if r < 1 or r > n:
        raise PreconditionError(f"need 1 <= r <= n, got r={r}, n={n}")


def reach_probability(r: int, n: int) -> ExactRational:
    """Probability that a shuffled deck lets the score reach r at some point."""
    _check_threshold(r, n)
    reaching = sum(p_exact_count(i, n) for i in range(r, n + 1))
    return Fraction(reaching, binomial(2 * n, n))


def reach_probability_by_reflection(r: int, n: int) -> ExactRational:
    """The same probability from the reflection principle: C(2n, n+r) / C(2n, n)."""
    _check_threshold(r, n)
    return Fraction(binomial(2 * n, n + r), binomial(2 * n, n))


def expected_score(r: int, n: int) -> ExactRational:
    return r * reach_probability(r, n)


def expected_scores(n: int) -> Dict[int, ExactRational]:
    return {r: expected_score(r, n) for r in range(1, n + 1)}


def optimal_r(n: int) -> int:
    """The threshold with the highest expected score; ties go to the smaller r."""
    if n < 1:
        raise PreconditionError(f"n must be at least 1, got {n}")
    scores = expected_scores(n)
    best = max(scores.values())
    winners = [r for r, score in scores.items() if score == best]
    if len(winners) > 1:
        logger.info("optimal threshold tie at n=%d between r=%s", n, winners)
    return winners[0]


def conjecture_r(n: int) -> int:
    """Smallest r with n <= 2r(r+1): r = 1 four times, 2 eight times, 3 twelve times..."""
    if n < 1:
        raise PreconditionError(f"n must be at least 1, got {n}")
    r = 1
    while n > 2 * r * (r + 1):
        r += 1
    return r


def tie_points(limit: int) -> List[int]:
    """Every n <= limit where two thresholds share the highest expected score."""
    ties = []
    for n in range(1, limit + 1):
        scores = expected_scores(n)
        best = max(scores.values())
        if sum(1 for score in scores.values() if score == best) > 1:
            ties.append(n)
    return ties


def score_histogram(n: int, bound: int = DEFAULT_DECK_BOUND) -> Dict[int, Natural]:
    """Bucket every deck of 2n cards by its highest score."""
    if n > bound:
        raise GuardExceededError(
            f"enumerating all decks with n={n} exceeds the bound of {bound}"
        )
    histogram = Counter(max_prefix_score(deck) for deck in enumerate_decks(n))
    return {r: histogram.get(r, 0) for r in range(n + 1)}


def strategy_expectation(r: int, n: int) -> ExactRational:
    """Mean payoff of the threshold-r strategy over every deck, by brute force."""
    _check_threshold(r, n)
    total = 0
    decks = 0
    for deck in enumerate_decks(n):
        decks += 1
        if max_prefix_score(deck) >= r:
            total += r
    return Fraction(total, decks)
