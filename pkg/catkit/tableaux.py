"""Two-row Standard Young Tableaux and their bijections with Dyck paths.

A tableau is stored as its top and bottom rows. The text form is two
comma-separated rows joined by '|', top first: "1,2,5|3,4". The bottom row may
be empty ("1,2|").
"""
import logging
from dataclasses import dataclass
from typing import List, Sequence, Tuple

from catkit.dyck import (
    DOWN,
    UP,
    DyckPath,
    ballot_sequences,
    heights,
    is_member_D,
    mirror,
    returns,
    trailing_downs,
)
from catkit.errors import (
    ColumnOrderError,
    PreconditionError,
    RowOrderError,
    TableauEntryError,
    TableauShapeError,
)

logger = logging.getLogger(__name__)


def _check_rows(top: Sequence[int], bottom: Sequence[int]) -> None:
    if len(top) < len(bottom):
        raise TableauShapeError(
            f"top row has {len(top)} cells but bottom row has {len(bottom)}"
        )
    size = len(top) + len(bottom)
    if sorted(list(top) + list(bottom)) != list(range(1, size + 1)):
        raise TableauEntryError(f"entries must be exactly 1..{size} with no repeats")
    for name, row in (("top", top), ("bottom", bottom)):
        for left, right in zip(row, row[1:]):
            if left >= right:
                raise RowOrderError(f"{name} row is not increasing at {left}, {right}")
    for column, (upper, lower) in enumerate(zip(top, bottom), start=1):
        if upper >= lower:
            raise ColumnOrderError(
                f"column {column} has {upper} above {lower}, which is not increasing"
            )


@dataclass(frozen=True)
class TwoRowTableau:
    """A Standard Young Tableau with (at most) two rows."""

    top: Tuple[int, ...]
    bottom: Tuple[int, ...]

    def __post_init__(self):
        _check_rows(self.top, self.bottom)

    @property
    def size(self) -> int:
        return len(self.top) + len(self.bottom)

    @property
    def d(self) -> int:
        """How many cells longer the top row is than the bottom row."""
        return len(self.top) - len(self.bottom)

    @property
    def is_rectangular(self) -> bool:
        return self.d == 0

    @classmethod
    def parse(cls, text: str) -> "TwoRowTableau":
        """Read the "1,2,5|3,4" text form."""
        if text.count("|") != 1:
            raise TableauShapeError(f"expected two rows separated by '|', got {text!r}")
        rows = []
        for row_text in text.split("|"):
            row_text = row_text.strip()
            try:
                rows.append(
                    tuple(int(cell) for cell in row_text.split(",")) if row_text else ()
                )
            except ValueError:
                raise TableauEntryError(
                    f"row {row_text!r} is not a list of integers"
                ) from None
        return cls(rows[0], rows[1])

    def __str__(self) -> str:
        return "|".join(",".join(str(cell) for cell in row) for row in self.rows)

    @property
    def rows(self) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
        return self.top, self.bottom


def validate_tableau(top: Sequence[int], bottom: Sequence[int]) -> TwoRowTableau:
    """Build a tableau from its rows.

    Raises:
        TableauShapeError: The bottom row is longer than the top row.
        TableauEntryError: The entries are not 1..N without repeats.
        RowOrderError: A row does not strictly increase.
        ColumnOrderError: Some column has its top entry above a smaller one.
    """
    return TwoRowTableau(tuple(top), tuple(bottom))


def is_reducible(tableau: TwoRowTableau) -> bool:
    """Do the first i-1 columns hold exactly 1..2i-2 for some 2 <= i <= n?

    Only rectangular tableaux of positive semisize are accepted. The scan starts
    at i = 2; at i = 1 the condition holds vacuously.
    """
    n = len(tableau.top)
    if not tableau.is_rectangular or n < 1:
        raise TableauShapeError("reducibility is defined for rectangular tableaux only")
    for i in range(2, n + 1):
        block = set(tableau.top[: i - 1]) | set(tableau.bottom[: i - 1])
        if block == set(range(1, 2 * i - 1)):
            return True
    return False


def _from_word(word: str) -> TwoRowTableau:
    top = tuple(index for index, step in enumerate(word, start=1) if step == UP)
    bottom = tuple(index for index, step in enumerate(word, start=1) if step == DOWN)
    return TwoRowTableau(top, bottom)


def enumerate_syt(d: int, n: int) -> List[TwoRowTableau]:
    """All tableaux of shape (n, n - d), ordered lexicographically by top row."""
    if d < 0 or d > n:
        raise TableauShapeError(f"shape (n, n - d) needs 0 <= d <= n, got d={d}, n={n}")
    return [_from_word(word) for word in ballot_sequences(n, n - d)]


def dyck_to_syt(path: DyckPath) -> TwoRowTableau:
    """Put entry i in the top row if step i is an upstep, else in the bottom row."""
    return _from_word(path.steps)


def syt_to_dyck(tableau: TwoRowTableau) -> DyckPath:
    if not tableau.is_rectangular:
        raise TableauShapeError(
            f"only rectangular tableaux correspond to Dyck paths, got d={tableau.d}"
        )
    top = set(tableau.top)
    return DyckPath("".join(UP if i in top else DOWN for i in range(1, tableau.size + 1)))


def pad(tableau: TwoRowTableau) -> TwoRowTableau:
    """Fill the bottom row up to the top row's length with the largest entries."""
    n = len(tableau.top)
    extra = tuple(range(tableau.size + 1, 2 * n + 1))
    return TwoRowTableau(tableau.top, tableau.bottom + extra)


def unpad(tableau: TwoRowTableau, d: int) -> TwoRowTableau:
    """Remove the entries 2n-d+1..2n from the end of a rectangular tableau's bottom row."""
    n = len(tableau.top)
    if not tableau.is_rectangular:
        raise TableauShapeError("unpad expects a rectangular tableau")
    if d < 0 or d > n:
        raise TableauShapeError(f"cannot remove {d} cells from a row of {n}")
    tail = tableau.bottom[n - d :]
    if tail != tuple(range(2 * n - d + 1, 2 * n + 1)):
        raise PreconditionError(
            f"bottom row must end with {2 * n - d + 1}..{2 * n} to remove {d} cells"
        )
    return TwoRowTableau(tableau.top, tableau.bottom[: n - d])


def _check_split(k: int, p: int) -> None:
    if k < 0 or p < 0 or k + p < 1:
        raise PreconditionError(f"need k, p >= 0 and k + p >= 1, got k={k}, p={p}")


def zeta(path: DyckPath, k: int, p: int) -> DyckPath:
    """Map a path ending with at least k+p downsteps onto D_{k,p}.

    v1 is the vertex with exactly p downsteps left and v2 the nearest vertex to
    its left at the same height. The piece between them is cut out, mirrored and
    put in front; the rest is closed up with the final p downsteps. For k = 0
    every path in the domain is already in D_{0,p}, and the map is the identity.
    """
    _check_split(k, p)
    if trailing_downs(path) < k + p:
        raise PreconditionError(
            f"path {path} must end with at least {k + p} downsteps"
        )
    if k == 0:
        return path
    steps = path.steps
    v1 = len(steps) - p
    levels = heights(steps)
    v2 = max(t for t in range(v1) if levels[t] == p)
    return DyckPath(mirror(steps[v2:v1]) + steps[:v2] + DOWN * p)


def zeta_inverse(path: DyckPath, k: int, p: int) -> DyckPath:
    """Undo :func:`zeta`.

    The path is cut at its first return after the origin into P1 and P2. The
    last p downsteps of P2 are dropped, the mirror image of P1 is hung on at
    height p and the p downsteps are put back at the end.
    """
    _check_split(k, p)
    if not is_member_D(path, k, p):
        raise PreconditionError(f"path {path} is not in D_{{{k},{p}}}")
    if k == 0:
        return path
    steps = path.steps
    first_return = next(t for t in returns(path) if t > 0)
    first, rest = steps[:first_return], steps[first_return:]
    return DyckPath(rest[: len(rest) - p] + mirror(first) + DOWN * p)


def tableau_to_class_path(tableau: TwoRowTableau, k: int, p: int) -> DyckPath:
    """The composite bijection from tableaux of shape (n, n-d) onto D_{k,p}, d = k+p."""
    _check_split(k, p)
    if tableau.d != k + p:
        raise TableauShapeError(
            f"tableau rows differ by {tableau.d} cells but k + p = {k + p}"
        )
    return zeta(syt_to_dyck(pad(tableau)), k, p)


def class_path_to_tableau(path: DyckPath, k: int, p: int) -> TwoRowTableau:
    return unpad(dyck_to_syt(zeta_inverse(path, k, p)), k + p)


def render_tableau(tableau: TwoRowTableau) -> str:
    """Draw the tableau as a plain-text grid of cells."""
    if not tableau.top:
        return ""
    width = len(str(tableau.size))

    def border(cells: int) -> str:
        return "+" + "+".join("-" * (width + 2) for _ in range(cells)) + "+"

    def cells(row: Tuple[int, ...]) -> str:
        return "|" + "|".join(f" {cell:>{width}} " for cell in row) + "|"

    lines = [border(len(tableau.top)), cells(tableau.top), border(len(tableau.top))]
    if tableau.bottom:
        lines += [cells(tableau.bottom), border(len(tableau.bottom))]
    return "\n".join(lines)
