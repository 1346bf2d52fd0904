# This file holds the error types raised by catkit.


class ConfigError(RuntimeError):
    """An error encountered during reading the config file.

    Args:
        msg: The message displayed to the user on error.
    """

    def __init__(self, msg: str):
        super(ConfigError, self).__init__("%s" % (msg,))


class CatkitError(Exception):
    """Base class for every domain error.

    Args:
        msg: The message displayed to the user on error.
    """

    def __init__(self, msg: str):
        super(CatkitError, self).__init__("%s" % (msg,))


class PreconditionError(CatkitError, ValueError):
    """An input did not satisfy the precondition of the operation it was given to."""


class InvalidPathError(PreconditionError):
    """A step sequence is not a Dyck path."""


class InvalidStepError(InvalidPathError):
    """A step sequence contains something other than 'u' and 'd'."""


class UnbalancedPathError(InvalidPathError):
    """A step sequence has a different number of upsteps and downsteps."""


class BelowAxisError(InvalidPathError):
    """A step sequence has a prefix with more downsteps than upsteps."""


class InvalidTableauError(PreconditionError):
    """A pair of rows is not a two-row Standard Young Tableau."""


class TableauShapeError(InvalidTableauError):
    """The bottom row is longer than the top row, or the shape is wrong for the call."""


class TableauEntryError(InvalidTableauError):
    """The entries are not exactly 1..N without repeats."""


class RowOrderError(InvalidTableauError):
    """A row does not strictly increase from left to right."""


class ColumnOrderError(InvalidTableauError):
    """A column does not increase from top to bottom."""


class InvalidPermutationError(PreconditionError):
    """A sequence is not a permutation of 1..n."""


class InvalidPatternError(PreconditionError):
    """A pattern description could not be understood."""


class UnknownFamilyError(PreconditionError):
    """A permutation family id is not one of the known ids."""


class InvalidDeckError(PreconditionError):
    """A card sequence is not a balanced red/black deck."""


class GuardExceededError(CatkitError):
    """A request would enumerate more objects than the resource guard allows."""


class InexactDivisionError(CatkitError, ArithmeticError):
    """A closed counting formula produced a non-integral quotient."""


class UsageError(CatkitError):
    """A command was given missing or out-of-range parameters."""
