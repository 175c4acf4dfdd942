"""Density lower bounds, the counting inequality, and the known-bounds table."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .code import PeriodicCode, identifying_set, window_census
from .grid import ball_size

RationalLike = Union[int, Fraction]


@dataclass(frozen=True)
class BoundResult:
    b_r: int
    k: Fraction
    value: Fraction


def density_lower_bound(b_r: int, k: RationalLike) -> Fraction:
    """The density lower bound 6 / (2*b_r + 4 + k), as an exact rational.

    b_r is the ball size for the radius in use; k bounds the number of
    size-2 identifying sets any one codeword can appear in (a maximum, or an
    average when rational).
    """
    k = Fraction(k)
    if b_r < 1:
        raise ValueError("ball size must be positive")
    if k < 0:
        raise ValueError("k must be nonnegative")
    return Fraction(6) / (2 * b_r + 4 + k)


def bound_result(b_r: int, k: RationalLike) -> BoundResult:
    return BoundResult(b_r, Fraction(k), density_lower_bound(b_r, k))


@dataclass(frozen=True)
class InequalityTerms:
    b_r: int
    codewords: int  # K: codewords in the window [-m, m]^2
    inner_size: int  # |G_{m-r}| = (2(m-r)+1)^2
    pair_rows: int  # vertices of G_{m-r} with identifying sets of size 2


def counting_inequality_check(
    code: PeriodicCode, r: int, m: int
) -> tuple[bool, InequalityTerms]:
    """Check b_r*K >= -2K + 3|G_{m-r}| - P exactly on a window.

    K counts codewords in [-m, m]^2; P counts the vertices of the inner
    window [-(m-r), m-r]^2 whose identifying sets have size exactly 2.  The
    inequality is a double count of codeword incidences and holds for every
    valid code.
    """
    if m <= r:
        raise ValueError("m must exceed r")
    b_r = ball_size(code.kind, r)
    K, _ = window_census(code, m)
    inner = m - r
    pair_rows = 0
    for i in range(-inner, inner + 1):
        for j in range(-inner, inner + 1):
            if len(identifying_set(code, (i, j), r)) == 2:
                pair_rows += 1
    inner_size = (2 * inner + 1) ** 2
    holds = b_r * K >= -2 * K + 3 * inner_size - pair_rows
    return holds, InequalityTerms(b_r, K, inner_size, pair_rows)


@dataclass(frozen=True)
class BoundRow:
    grid: str
    r: int
    previous_lower: Fraction
    new_lower: Fraction
    upper: Fraction


def known_bounds_table() -> tuple[BoundRow, ...]:
    """Known density bounds for 2- and 3-identifying codes on these grids."""
    return (
        BoundRow("hex", 2, Fraction(2, 11), Fraction(1, 5), Fraction(4, 19)),
        BoundRow("hex", 3, Fraction(2, 17), Fraction(3, 25), Fraction(1, 6)),
        BoundRow("square", 2, Fraction(3, 20), Fraction(6, 37), Fraction(5, 29)),
    )
