"""Dyck paths, the classes P_{k,p} and D_{k,p}, and their enumeration.

Paths are encoded as strings over 'u' (upstep) and 'd' (downstep); the empty
string is the empty path. Enumeration order is lexicographic with u < d.
"""
import logging
from dataclasses import dataclass
from typing import Iterable, Iterator, List, Union

from catkit.errors import BelowAxisError, InvalidStepError, UnbalancedPathError

logger = logging.getLogger(__name__)

UP = "u"
DOWN = "d"


def _check_steps(steps: str) -> None:
    for index, step in enumerate(steps):
        if step not in (UP, DOWN):
            raise InvalidStepError(f"step {index} is {step!r}, expected 'u' or 'd'")
    if steps.count(UP) != steps.count(DOWN):
        raise UnbalancedPathError(
            f"path {steps!r} has {steps.count(UP)} upsteps and "
            f"{steps.count(DOWN)} downsteps"
        )
    height = 0
    for index, step in enumerate(steps):
        height += 1 if step == UP else -1
        if height < 0:
            raise BelowAxisError(
                f"path {steps!r} goes below the x-axis after step {index}"
            )


@dataclass(frozen=True)
class DyckPath:
    """A balanced u/d sequence that never goes below the x-axis."""

    steps: str = ""

    def __post_init__(self):
        _check_steps(self.steps)

    @property
    def semilength(self) -> int:
        return len(self.steps) // 2

    def __len__(self) -> int:
        return len(self.steps)

    def __str__(self) -> str:
        return self.steps


StepsLike = Union[DyckPath, str]


def _as_steps(path: StepsLike) -> str:
    return path.steps if isinstance(path, DyckPath) else path


def validate(steps: Union[str, Iterable[str]]) -> DyckPath:
    """Turn a step sequence into a DyckPath.

    Raises:
        InvalidStepError: A step is neither 'u' nor 'd'.
        UnbalancedPathError: The up and down counts differ.
        BelowAxisError: Some prefix has more downs than ups.
    """
    if not isinstance(steps, str):
        steps = "".join(steps)
    return DyckPath(steps)


def heights(path: StepsLike) -> List[int]:
    """Prefix heights at every vertex, starting with 0 at the origin."""
    result = [0]
    for step in _as_steps(path):
        result.append(result[-1] + (1 if step == UP else -1))
    return result


def returns(path: DyckPath) -> List[int]:
    """Vertex positions (endpoints included) where the path touches the axis."""
    return [t for t, height in enumerate(heights(path)) if height == 0]


def interior_returns(path: DyckPath) -> List[int]:
    return [t for t in returns(path) if 0 < t < len(path)]


def leading_ups(path: StepsLike) -> int:
    steps = _as_steps(path)
    return len(steps) - len(steps.lstrip(UP))


def trailing_downs(path: StepsLike) -> int:
    steps = _as_steps(path)
    return len(steps) - len(steps.rstrip(DOWN))


def max_height(path: StepsLike) -> int:
    """Highest prefix height of a step sequence (0 for the empty one)."""
    return max(heights(path))


def mirror(steps: str) -> str:
    """Reverse a step sequence and swap u with d (a left-right reflection)."""
    return "".join(DOWN if step == UP else UP for step in reversed(steps))


def is_member_P(path: DyckPath, k: int, p: int) -> bool:
    """Does the path start with at least k upsteps and end with at least p downsteps?"""
    return leading_ups(path) >= k and trailing_downs(path) >= p


def is_member_D(path: DyckPath, k: int, p: int) -> bool:
    """Is the path reducible in P_{k,p}?

    A member of P_{k,p} is reducible when it splits at some return into a part of
    semilength at least k followed by a part of semilength at least p. Empty parts
    are allowed, so every path (the empty one included) is in D_{0,0}.
    """
    if not is_member_P(path, k, p):
        return False
    n = path.semilength
    return any(t // 2 >= k and n - t // 2 >= p for t in returns(path))


def ballot_sequences(ups: int, downs: int) -> Iterator[str]:
    """All u/d words with the given counts whose prefixes never dip below 0.

    Backtracking tries u before d, so words come out in lexicographic order.
    """
    word: List[str] = []

    def extend(ups_left: int, downs_left: int) -> Iterator[str]:
        if not ups_left and not downs_left:
            yield "".join(word)
            return
        if ups_left:
            word.append(UP)
            yield from extend(ups_left - 1, downs_left)
            word.pop()
        # Placing a downstep must keep (ups used) >= (downs used)
        if downs_left and (ups - ups_left) > (downs - downs_left):
            word.append(DOWN)
            yield from extend(ups_left, downs_left - 1)
            word.pop()

    yield from extend(ups, downs)


def enumerate_dyck(n: int) -> List[DyckPath]:
    """Every Dyck path of semilength n, lexicographic with u < d."""
    if n < 0:
        raise ValueError(f"semilength must be nonnegative, got {n}")
    return [DyckPath(steps) for steps in ballot_sequences(n, n)]


def enumerate_P(k: int, p: int, n: int) -> List[DyckPath]:
    return [path for path in enumerate_dyck(n) if is_member_P(path, k, p)]


def enumerate_D(k: int, p: int, n: int) -> List[DyckPath]:
    """The paths of D_{k,p} with semilength n, in canonical order."""
    if k < 0 or p < 0:
        raise ValueError(f"k and p must be nonnegative, got k={k}, p={p}")
    return [path for path in enumerate_dyck(n) if is_member_D(path, k, p)]


def render_path(path: StepsLike) -> str:
    """Draw a step sequence as a plain-text mountain range.

    Upsteps are drawn as '/', downsteps as '\\'; the bottom line is the x-axis.
    """
    steps = _as_steps(path)
    if not steps:
        return ""
    levels = heights(steps)
    low = min(levels)
    top = max(levels)
    rows = [[" "] * len(steps) for _ in range(top - low)]
    for index, step in enumerate(steps):
        if step == UP:
            rows[levels[index] - low][index] = "/"
        else:
            rows[levels[index + 1] - low][index] = "\\"
    return "\n".join("".join(row).rstrip() for row in reversed(rows))
