"""Vincular patterns of length three and the permutation families built from them.

Families (ids as used on the command line):

* T7  - avoid (1-2-3) and end in a descent
* T8  - exactly one (1-23) and exactly one (1-2-3)
* T9  - exactly one (1-2-3)
* T10 - T9 with no (1-23)
* T11 - T10 with no (12-3)

Permutations of S_n are always produced in lexicographic order.
"""
import itertools
import logging
from dataclasses import dataclass
from enum import Enum
from typing import Callable, Dict, FrozenSet, Iterator, List, Sequence, Tuple

from catkit.errors import (
    InvalidPatternError,
    InvalidPermutationError,
    PreconditionError,
    UnknownFamilyError,
)
from catkit.exactnum import Natural, binomial, catalan, exact_quotient

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Permutation:
    """A sequence holding each of 1..n exactly once."""

    ranks: Tuple[int, ...]

    def __post_init__(self):
        if sorted(self.ranks) != list(range(1, len(self.ranks) + 1)):
            raise InvalidPermutationError(
                f"{self.ranks} is not a permutation of 1..{len(self.ranks)}"
            )

    @classmethod
    def parse(cls, text: str) -> "Permutation":
        """Read one-line notation: "34215", or "1,10,2,..." when n > 9."""
        text = text.strip()
        try:
            if "," in text:
                ranks = tuple(int(part) for part in text.split(","))
            else:
                ranks = tuple(int(char) for char in text)
        except ValueError:
            raise InvalidPermutationError(f"{text!r} is not a permutation") from None
        return cls(ranks)

    def __len__(self) -> int:
        return len(self.ranks)

    def __str__(self) -> str:
        separator = "" if len(self.ranks) <= 9 else ","
        return separator.join(str(rank) for rank in self.ranks)


@dataclass(frozen=True)
class VincularPattern:
    """A classical pattern plus the slots that must sit next to each other.

    `adjacent` holds the 1-based slot positions j whose slots j and j+1 have to
    occupy consecutive positions of the host permutation.
    """

    values: Tuple[int, ...]
    adjacent: FrozenSet[int] = frozenset()

    def __post_init__(self):
        if sorted(self.values) != list(range(1, len(self.values) + 1)):
            raise InvalidPatternError(f"{self.values} is not a permutation")
        if not self.adjacent <= set(range(1, len(self.values))):
            raise InvalidPatternError(
                f"adjacency {sorted(self.adjacent)} out of range for length "
                f"{len(self.values)}"
            )

    @classmethod
    def parse(cls, text: str) -> "VincularPattern":
        """Read dash notation: "1-2-3", "1-23", "12-3"."""
        values: List[int] = []
        adjacent = set()
        for block in text.strip().split("-"):
            if not block.isdigit():
                raise InvalidPatternError(f"cannot read pattern {text!r}")
            start = len(values) + 1
            values.extend(int(char) for char in block)
            adjacent.update(range(start, start + len(block) - 1))
        return cls(tuple(values), frozenset(adjacent))

    def __str__(self) -> str:
        text = str(self.values[0]) if self.values else ""
        for slot, value in enumerate(self.values[1:], start=1):
            text += ("" if slot in self.adjacent else "-") + str(value)
        return text


PATTERN_1_2_3 = VincularPattern((1, 2, 3))
PATTERN_1_23 = VincularPattern((1, 2, 3), frozenset({2}))
PATTERN_12_3 = VincularPattern((1, 2, 3), frozenset({1}))


def _increasing_triples(values: Sequence[int], adjacent: FrozenSet[int] = frozenset()) -> int:
    """Count increasing triples, summing (smaller on the left) x (larger on the right)
    over every possible middle element."""
    total = 0
    for middle in range(1, len(values) - 1):
        pivot = values[middle]
        if 1 in adjacent:
            left = 1 if values[middle - 1] < pivot else 0
        else:
            left = sum(1 for value in values[:middle] if value < pivot)
        if not left:
            continue
        if 2 in adjacent:
            right = 1 if values[middle + 1] > pivot else 0
        else:
            right = sum(1 for value in values[middle + 1 :] if value > pivot)
        total += left * right
    return total


def _standardize(values: Sequence[int]) -> Tuple[int, ...]:
    order = sorted(values)
    return tuple(order.index(value) + 1 for value in values)


def occurrences(perm: Permutation, pattern: VincularPattern) -> int:
    """Number of occurrences of a vincular pattern in a permutation."""
    size = len(pattern.values)
    if size > len(perm):
        return 0
    if pattern.values == (1, 2, 3):
        return _increasing_triples(perm.ranks, pattern.adjacent)
    count = 0
    for positions in itertools.combinations(range(len(perm)), size):
        if any(positions[j - 1] + 1 != positions[j] for j in pattern.adjacent):
            continue
        if _standardize([perm.ranks[i] for i in positions]) == pattern.values:
            count += 1
    return count


def avoids_increasing_triple(values: Sequence[int]) -> bool:
    return _increasing_triples(values) == 0


def ends_in_descent(perm: Permutation) -> bool:
    if len(perm) < 2:
        raise PreconditionError("a descent at the end needs at least two entries")
    return perm.ranks[-2] > perm.ranks[-1]


def bounded_permutations(n: int, bound: int) -> Iterator[Tuple[int, ...]]:
    """Permutations of 1..n with at most `bound` (1-2-3) occurrences, lexicographic.

    Built by extending prefixes; a prefix whose occurrence count already exceeds
    the bound is dropped together with all of its extensions.
    """
    prefix: List[int] = []
    # smaller_before[i] = how many earlier entries are smaller than prefix[i]
    smaller_before: List[int] = []
    used = [False] * (n + 1)

    def extend(count: int) -> Iterator[Tuple[int, ...]]:
        if len(prefix) == n:
            yield tuple(prefix)
            return
        for value in range(1, n + 1):
            if used[value]:
                continue
            added = sum(
                below for entry, below in zip(prefix, smaller_before) if entry < value
            )
            if count + added > bound:
                continue
            prefix.append(value)
            smaller_before.append(sum(1 for entry in prefix[:-1] if entry < value))
            used[value] = True
            yield from extend(count + added)
            used[value] = False
            smaller_before.pop()
            prefix.pop()

    yield from extend(0)


def enumerate_avoiders(values: Sequence[int]) -> List[Tuple[int, ...]]:
    """Arrangements of the given distinct values that avoid (1-2-3), lexicographic."""
    ordered = sorted(values)
    return [
        tuple(ordered[rank - 1] for rank in ranks)
        for ranks in bounded_permutations(len(ordered), 0)
    ]


class Family(Enum):
    T7 = "T7"
    T8 = "T8"
    T9 = "T9"
    T10 = "T10"
    T11 = "T11"

    @classmethod
    def lookup(cls, name: str) -> "Family":
        try:
            return cls(name.strip().upper())
        except ValueError:
            known = ", ".join(family.value for family in cls)
            raise UnknownFamilyError(
                f"unknown family {name!r}; expected one of {known}"
            ) from None


def _is_t7(perm: Permutation) -> bool:
    return (
        len(perm) >= 2
        and ends_in_descent(perm)
        and occurrences(perm, PATTERN_1_2_3) == 0
    )


def _is_t8(perm: Permutation) -> bool:
    return (
        occurrences(perm, PATTERN_1_2_3) == 1 and occurrences(perm, PATTERN_1_23) == 1
    )


def _is_t9(perm: Permutation) -> bool:
    return occurrences(perm, PATTERN_1_2_3) == 1


def _is_t10(perm: Permutation) -> bool:
    return _is_t9(perm) and occurrences(perm, PATTERN_1_23) == 0


def _is_t11(perm: Permutation) -> bool:
    return _is_t10(perm) and occurrences(perm, PATTERN_12_3) == 0


# family -> (largest (1-2-3) count any member can have, membership test)
FAMILY_RULES: Dict[Family, Tuple[int, Callable[[Permutation], bool]]] = {
    Family.T7: (0, _is_t7),
    Family.T8: (1, _is_t8),
    Family.T9: (1, _is_t9),
    Family.T10: (1, _is_t10),
    Family.T11: (1, _is_t11),
}


def in_family(perm: Permutation, family: Family) -> bool:
    return FAMILY_RULES[family][1](perm)


def enumerate_family(n: int, family: Family) -> List[Permutation]:
    """Members of a family in S_n, lexicographic."""
    if n < 0:
        raise ValueError(f"length must be nonnegative, got {n}")
    bound, rule = FAMILY_RULES[family]
    members = []
    for ranks in bounded_permutations(n, bound):
        perm = Permutation(ranks)
        if rule(perm):
            members.append(perm)
    logger.debug("family %s at n=%d has %d members", family.value, n, len(members))
    return members


def filter_symmetric_group(n: int, family: Family) -> List[Permutation]:
    """The same family as :func:`enumerate_family`, by filtering all of S_n.

    Slow, and only there to check the pruned generator.
    """
    rule = FAMILY_RULES[family][1]
    return [
        perm
        for perm in map(Permutation, itertools.permutations(range(1, n + 1)))
        if rule(perm)
    ]


def a_count(n: int) -> Natural:
    """Members of T7: (3 / (n+1)) C(2n-2, n) for n >= 2."""
    if n < 2:
        return 0
    return exact_quotient(3 * binomial(2 * n - 2, n), n + 1)


def b_count(n: int) -> Natural:
    """Members of T8: (5 / (n+2)) C(2n-2, n+1) for n >= 3."""
    if n < 3:
        return 0
    return exact_quotient(5 * binomial(2 * n - 2, n + 1), n + 2)


def c_count(n: int) -> Natural:
    """Members of T9: (6 / (n+3)) C(2n-1, n+2) for n >= 3."""
    if n < 3:
        return 0
    return exact_quotient(6 * binomial(2 * n - 1, n + 2), n + 3)


def d_count(n: int) -> Natural:
    """Members of T10: (7 / (n+3)) C(2n-2, n+2) for n >= 4."""
    if n < 4:
        return 0
    return exact_quotient(7 * binomial(2 * n - 2, n + 2), n + 3)


def f_count(n: int) -> Natural:
    """Members of T11: (8 / (n+3)) C(2n-3, n+2) for n >= 5."""
    if n < 5:
        return 0
    return exact_quotient(8 * binomial(2 * n - 3, n + 2), n + 3)


FAMILY_COUNTS: Dict[Family, Callable[[int], Natural]] = {
    Family.T7: a_count,
    Family.T8: b_count,
    Family.T9: c_count,
    Family.T10: d_count,
    Family.T11: f_count,
}

# family -> (d, shift) with count(n) == class_count(d, n + shift)
FAMILY_SHIFTS: Dict[Family, Tuple[int, int]] = {
    Family.T7: (2, 0),
    Family.T8: (4, 1),
    Family.T9: (5, 2),
    Family.T10: (6, 2),
    Family.T11: (7, 2),
}


def family_count(family: Family, n: int) -> Natural:
    return FAMILY_COUNTS[family](n)


def _unique_increasing_triple(perm: Permutation) -> Tuple[int, int, int]:
    found = [
        positions
        for positions in itertools.combinations(range(len(perm)), 3)
        if perm.ranks[positions[0]] < perm.ranks[positions[1]] < perm.ranks[positions[2]]
    ]
    if len(found) != 1:
        raise PreconditionError(
            f"{perm} has {len(found)} occurrences of (1-2-3), expected exactly one"
        )
    return found[0]


def theta(perm: Permutation) -> Tuple[Permutation, int]:
    """Send a member of T8 into J_{n,b}.

    With the single occurrence a, b, c (b and c adjacent), b takes the place of a
    and a is put immediately to the right of c. Returns the image and b.
    """
    if occurrences(perm, PATTERN_1_23) != 1:
        raise PreconditionError(f"{perm} must contain (1-23) exactly once")
    j, k, _ = _unique_increasing_triple(perm)
    a, b = perm.ranks[j], perm.ranks[k]
    image = list(perm.ranks)
    image[j] = b
    del image[k]
    # c now sits at index k
    image.insert(k + 1, a)
    return Permutation(tuple(image)), b


def theta_inverse(perm: Permutation, b: int) -> Permutation:
    if not is_in_J(perm, b, JVariant.J):
        raise PreconditionError(f"{perm} is not in J with split value {b}")
    split = len(perm) - (b - 1)
    left, right = list(perm.ranks[:split]), list(perm.ranks[split:])
    a = right[0]
    left[left.index(b)] = a
    left.insert(len(left) - 1, b)
    return Permutation(tuple(left + right[1:]))


def tau(perm: Permutation) -> Tuple[Permutation, int]:
    """Send a member of T9 of length n into J'_{n+1,b}.

    With the single occurrence a, b, c: a goes to b's place, b to a's place, c
    right in front of a, a second b where c was, and everything left of a is
    incremented. Returns the image (length n+1) and b.
    """
    j, k, m = _unique_increasing_triple(perm)
    a, b, c = (perm.ranks[i] for i in (j, k, m))
    left = [rank + 1 for rank in perm.ranks[:k]]
    left[j] = b + 1
    image = left + [c + 1, a] + list(perm.ranks[k + 1 : m]) + [b] + list(perm.ranks[m + 1 :])
    return Permutation(tuple(image)), b


def tau_inverse(perm: Permutation, b: int) -> Permutation:
    """Decrease the left block, then put a, b and c back where they came from."""
    if not is_in_J(perm, b, JVariant.J1):
        raise PreconditionError(f"{perm} is not in J' with split value {b}")
    split = len(perm) - b
    left = [rank - 1 for rank in perm.ranks[:split]]
    right = list(perm.ranks[split:])
    c = left.pop()
    a = right[0]
    second_b = right.index(b)
    restored = [a if rank == b else rank for rank in left]
    restored += [b] + right[1:second_b] + [c] + right[second_b + 1 :]
    return Permutation(tuple(restored))


class JVariant(Enum):
    """The split classes J, J', J'' and J''' targeted by theta and tau."""

    J = "J"
    J1 = "J'"
    J2 = "J''"
    J3 = "J'''"


def is_in_J(perm: Permutation, b: int, variant: JVariant) -> bool:
    """Does the permutation split as L R in the way the variant asks?

    J:    R = {1..b-1}, L = {b..n}, b not rightmost in L.
    J':   R = {1..b}, L = {b+1..n}, b+1 not rightmost in L, b not leftmost in R.
    J'':  J' and b not second-leftmost in R.
    J''': J'' and b+1 not second-rightmost in L.
    Both blocks are nonempty and avoid (1-2-3).
    """
    size = len(perm)
    right_size = b - 1 if variant is JVariant.J else b
    if right_size < 1 or right_size >= size:
        return False
    left, right = perm.ranks[: size - right_size], perm.ranks[size - right_size :]
    if set(right) != set(range(1, right_size + 1)):
        return False
    if not (avoids_increasing_triple(left) and avoids_increasing_triple(right)):
        return False
    if variant is JVariant.J:
        return left[-1] != b
    if left[-1] == b + 1 or right[0] == b:
        return False
    if variant is JVariant.J1:
        return True
    if len(right) > 1 and right[1] == b:
        return False
    if variant is JVariant.J2:
        return True
    return not (len(left) > 1 and left[-2] == b + 1)


def enumerate_J(length: int, b: int, variant: JVariant) -> List[Permutation]:
    """Members of a J class, built from the (1-2-3)-avoiding blocks, lexicographic."""
    right_size = b - 1 if variant is JVariant.J else b
    if right_size < 1 or right_size >= length:
        return []
    members = []
    for left in enumerate_avoiders(range(right_size + 1, length + 1)):
        for right in enumerate_avoiders(range(1, right_size + 1)):
            candidate = Permutation(left + right)
            if is_in_J(candidate, b, variant):
                members.append(candidate)
    return members


def split_sum(variant: JVariant, n: int) -> Natural:
    """Size of the whole J class as the proofs' sums over the split value give it.

    n is the length of the permutations being counted (the J class itself holds
    permutations of length n for J and n+1 for the primed variants).
    """
    C = catalan
    if variant is JVariant.J:
        return sum((C(n - i + 1) - C(n - i)) * C(i - 1) for i in range(2, n))
    if variant is JVariant.J1:
        return sum((C(n - i + 1) - C(n - i)) * (C(i) - C(i - 1)) for i in range(2, n))
    if variant is JVariant.J2:
        return sum(
            (C(n - i + 1) - C(n - i)) * (C(i) - 2 * C(i - 1)) for i in range(3, n)
        )
    return sum(
        (C(n - i + 1) - 2 * C(n - i)) * (C(i) - 2 * C(i - 1)) for i in range(3, n - 1)
    )


def displayed_sum(variant: JVariant, n: int) -> int:
    """The J'' and J''' sums in their displayed form, with the left factor shifted
    down by one index. Kept for reporting; these do not match the brute force."""
    C = catalan
    if variant is JVariant.J2:
        return sum(
            (C(n - i) - C(n - i - 1)) * (C(i) - 2 * C(i - 1)) for i in range(3, n)
        )
    if variant is JVariant.J3:
        return sum(
            (C(n - i) - 2 * C(n - i - 1)) * (C(i) - 2 * C(i - 1))
            for i in range(3, n - 1)
        )
    raise ValueError(f"no displayed variant for {variant.value}")
