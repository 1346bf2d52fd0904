"""Exact integer and rational arithmetic for the counting formulas.

All values are Python integers or :class:`fractions.Fraction`, so nothing here
overflows or rounds. Closed formulas that involve a division go through
:func:`exact_quotient`, which refuses to return anything but an exact integer.
"""
import logging
import math
from fractions import Fraction
from typing import List, Sequence

from catkit.errors import InexactDivisionError

logger = logging.getLogger(__name__)

# Counts are plain ints and probabilities are Fractions (always in lowest terms
# with a positive denominator, compared by value).
Natural = int
ExactRational = Fraction


def exact_quotient(numerator: int, denominator: int) -> Natural:
    """Divide two integers, asserting that the division is exact.

    Raises:
        InexactDivisionError: If `denominator` does not divide `numerator`.
    """
    quotient, remainder = divmod(numerator, denominator)
    if remainder:
        raise InexactDivisionError(
            f"{numerator} is not divisible by {denominator} (remainder {remainder})"
        )
    return quotient


def binomial(a: int, b: int) -> Natural:
    """C(a, b), with the convention that it is 0 when b lies outside [0, a]."""
    if a < 0:
        raise ValueError(f"binomial top argument must be nonnegative, got {a}")
    if b < 0 or b > a:
        return 0
    return math.comb(a, b)


def catalan(n: int) -> Natural:
    """The nth Catalan number C(2n, n) / (n + 1)."""
    if n < 0:
        raise ValueError(f"catalan index must be nonnegative, got {n}")
    return exact_quotient(binomial(2 * n, n), n + 1)


def class_count(d: int, n: int) -> Natural:
    """Number of paths in D_{k,p} of semilength n for any k + p = d.

    This is ((d + 1) / (n + 1)) * C(2n - d, n), which is also the number of
    two-row tableaux of shape (n, n - d). It is 0 whenever n < d.
    """
    if d < 0 or n < 0:
        raise ValueError(f"class_count needs d, n >= 0, got d={d}, n={n}")
    top = 2 * n - d
    if top < 0:
        return 0
    return exact_quotient((d + 1) * binomial(top, n), n + 1)


def catalan_power_coeff(j: int, m: int) -> Natural:
    """The coefficient of x^m in C(x)^j, that is (j / (2m + j)) * C(2m + j, m)."""
    if j < 1 or m < 0:
        raise ValueError(f"catalan_power_coeff needs j >= 1, m >= 0, got j={j}, m={m}")
    return exact_quotient(j * binomial(2 * m + j, m), 2 * m + j)


def convolve(a: Sequence[int], b: Sequence[int], order: int) -> List[int]:
    """Cauchy product of two coefficient lists, truncated after x^order."""
    result = [0] * (order + 1)
    for i, a_i in enumerate(a[: order + 1]):
        if not a_i:
            continue
        for j, b_j in enumerate(b[: order + 1 - i]):
            result[i + j] += a_i * b_j
    return result


def catalan_series(order: int) -> List[int]:
    """Catalan numbers C_0..C_order built only from the recurrence C = 1 + x C^2."""
    if order < 0:
        raise ValueError(f"series order must be nonnegative, got {order}")
    series = [1]
    for m in range(order):
        series.append(sum(series[i] * series[m - i] for i in range(m + 1)))
    return series


def series_catalan_power(j: int, order: int) -> List[int]:
    """Coefficients 0..order of C(x)^j, by repeated truncated convolution.

    This never touches a binomial coefficient, so it is an independent check on
    :func:`catalan_power_coeff` and :func:`class_count`.
    """
    if j < 1:
        raise ValueError(f"series power must be positive, got {j}")
    base = catalan_series(order)
    power = list(base)
    for _ in range(j - 1):
        power = convolve(power, base, order)
    return power


def satisfies_catalan_equation(series: Sequence[int]) -> bool:
    """Check C = 1 + x C^2 on a truncated series, up to its own order."""
    order = len(series) - 1
    if order < 0:
        return True
    square = convolve(series, series, order)
    expected = [1] + square[:order]
    return list(series) == expected
