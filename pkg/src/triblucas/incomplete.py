"""Incomplete Tribonacci and Tribonacci-Lucas polynomials and numbers.

The incomplete Tribonacci polynomial truncates the binomial double-sum
representation of T_n(x) at level s:

    T_n^(s)(x) = sum_{i=0..s} sum_{j=0..i} C(i,j) C(n-i-j-1, i) x^(2n-3(i+j)-2),
    0 <= s <= floor((n-1)/2),

and the incomplete Tribonacci-Lucas polynomial truncates the rising-diagonal
sum of the polynomial triangle:

    K_n^(s)(x) = sum_{i=0..s} B(n-i, i)(x),   0 <= s <= floor(n/2),

equivalently a double-binomial sum with the n = i+j cells skipped.  Taking
s at its maximum recovers the complete polynomial; x = 1 gives the number
variants T_n(s), K_n(s).  This module also carries the boundary closed
forms, the homogeneous / non-homogeneous recurrences, the cross-family
relation, the partial-sum identity (with checked halving) and the row-sum
identity.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import Tuple

from .errors import DomainError, InternalConsistencyError
from .poly import IntPoly
from .sequences import tribonacci_lucas_number, tribonacci_lucas_poly
from .triangles import (
    exact_div,
    triangle_entry_poly,
    weighted_binomial_diagonal_sum,
)

TRIANGLE_SUM = "triangle_sum"
BINOMIAL_SUM = "binomial_sum"

NUMBERS = "numbers"
POLYNOMIALS = "polynomials"


class IncompleteFamily(enum.Enum):
    INC_TRIBONACCI = "inc-tribonacci"
    INC_TRIBONACCI_LUCAS = "inc-tl"


def max_level(family: IncompleteFamily, n: int) -> int:
    """Largest valid truncation level s for index n in the given family."""
    if family is IncompleteFamily.INC_TRIBONACCI:
        return (n - 1) // 2
    return n // 2


def min_index(family: IncompleteFamily) -> int:
    return 1 if family is IncompleteFamily.INC_TRIBONACCI else 0


def is_valid(family: IncompleteFamily, n: int, s: int) -> bool:
    return n >= min_index(family) and 0 <= s <= max_level(family, n)


def check_domain(family: IncompleteFamily, n: int, s: int) -> None:
    if n < min_index(family):
        raise DomainError(
            f"index n={n} below the minimum {min_index(family)} for {family.value}")
    if not 0 <= s <= max_level(family, n):
        raise DomainError(
            f"level s={s} outside the valid interval 0..{max_level(family, n)} "
            f"for {family.value} at n={n}")


@dataclass(frozen=True)
class IncompleteIndex:
    """A validated (n, s) pair for one incomplete family."""

    n: int
    s: int
    family: IncompleteFamily

    def __post_init__(self):
        check_domain(self.family, self.n, self.s)


@lru_cache(maxsize=None)
def incomplete_tribonacci_poly(n: int, s: int) -> IntPoly:
    """T_n^(s)(x) by direct evaluation of the truncated double sum."""
    check_domain(IncompleteFamily.INC_TRIBONACCI, n, s)
    terms = []
    for i in range(s + 1):
        for j in range(i + 1):
            c = comb(i, j) * comb(n - i - j - 1, i)
            if c == 0:
                continue
            power = 2 * n - 3 * (i + j) - 2
            assert power >= 0
            terms.append((power, c))
    return IntPoly.from_terms(terms)


def incomplete_tribonacci_number(n: int, s: int) -> int:
    """T_n(s) = T_n^(s)(1)."""
    return incomplete_tribonacci_poly(n, s).evaluate(1)


@lru_cache(maxsize=None)
def incomplete_tl_poly(n: int, s: int, method: str = TRIANGLE_SUM) -> IntPoly:
    """K_n^(s)(x) as a level-s rising-diagonal partial sum.

    ``triangle_sum`` adds the stored triangle entries B(n-i, i)(x);
    ``binomial_sum`` evaluates the closed double sum (n = i+j cells skipped,
    n = 0 served directly from the triangle apex).  The two methods agree;
    the def1-methods sweep verifies that.
    """
    check_domain(IncompleteFamily.INC_TRIBONACCI_LUCAS, n, s)
    if method == TRIANGLE_SUM:
        total = IntPoly.zero()
        for i in range(s + 1):
            total = total + triangle_entry_poly(n - i, i)
        return total
    if method != BINOMIAL_SUM:
        raise DomainError(f"unknown method {method!r}")
    if n == 0:
        return IntPoly.constant(3)
    terms = []
    for i in range(s + 1):
        for j in range(i + 1):
            if n == i + j:
                continue
            c = comb(i, j) * comb(n - i - j, i)
            if c == 0:
                continue
            coeff = exact_div(n * c, n - i - j)
            power = 2 * n - 3 * (i + j)
            assert power >= 0
            terms.append((power, coeff))
    return IntPoly.from_terms(terms)


@lru_cache(maxsize=None)
def incomplete_tl_number(n: int, s: int) -> int:
    """K_n(s) = K_n^(s)(1)."""
    return incomplete_tl_poly(n, s).evaluate(1)


# Boundary closed forms read off the first/last columns of the incomplete
# table.  Keys are the catalog ids they are checked under.
EQ33, EQ34, EQ35, EQ36 = "eq33", "eq34", "eq35", "eq36"


def boundary_form(n: int, which: str) -> IntPoly:
    """Closed boundary expressions for extreme truncation levels.

    eq33: K_n^(0)(x) = x^(2n), n >= 1
    eq34: K_n^(1)(x) = x^(2n) + n x^(2n-3) + n x^(2n-6), n >= 3
    eq35: K_n^(floor(n/2))(x) = K_n(x), n >= 0
    eq36: K_n^(floor((n-2)/2))(x) = K_n(x) - 2 x^(n/2) for even n >= 2,
          K_n(x) - (n x^((n+3)/2) + n x^((n-3)/2)) for odd n >= 2
    """
    if which == EQ33:
        if n < 1:
            raise DomainError(f"eq33 requires n >= 1, got {n}")
        return IntPoly.monomial(1, 2 * n)
    if which == EQ34:
        if n < 3:
            raise DomainError(f"eq34 requires n >= 3, got {n}")
        return IntPoly.from_terms([(2 * n, 1), (2 * n - 3, n), (2 * n - 6, n)])
    if which == EQ35:
        if n < 0:
            raise DomainError(f"eq35 requires n >= 0, got {n}")
        return tribonacci_lucas_poly(n)
    if which == EQ36:
        if n < 2:
            raise DomainError(f"eq36 requires n >= 2, got {n}")
        k = tribonacci_lucas_poly(n)
        if n % 2 == 0:
            return k - IntPoly.monomial(2, n // 2)
        return k - IntPoly.from_terms([((n + 3) // 2, n), ((n - 3) // 2, n)])
    raise DomainError(f"unknown boundary form {which!r}")


def tl_relation_rhs(n: int, s: int) -> IntPoly:
    """T_{n+1}^(s)(x) + x T_{n-1}^(s-1)(x) + 2 T_{n-2}^(s-1)(x).

    Equals K_n^(s)(x) for n > 2 and 1 <= s <= floor((n-1)/2); the two sides
    come from different families, so this is the cross-family bridge.
    """
    if n <= 2:
        raise DomainError(f"relation requires n > 2, got {n}")
    if not 1 <= s <= (n - 1) // 2:
        raise DomainError(
            f"level s={s} outside the valid interval 1..{(n - 1) // 2} at n={n}")
    return (incomplete_tribonacci_poly(n + 1, s)
            + incomplete_tribonacci_poly(n - 1, s - 1).shifted(1)
            + 2 * incomplete_tribonacci_poly(n - 2, s - 1))


def partial_sum_lhs_rhs(n: int, h: int, s: int) -> Tuple[int, int]:
    """Both sides of the incomplete Tribonacci-Lucas partial-sum identity.

    LHS = sum_{i=0..h-1} K_{n+i}(s);
    RHS = (K_{n+h+2}(s+1) - K_{n+2}(s+1) + K_n(s) - K_{n+h}(s)) / 2,
    where the numerator is checked to be even before halving.
    """
    if n < 1 or h < 1:
        raise DomainError(f"need n >= 1 and h >= 1, got n={n}, h={h}")
    check_domain(IncompleteFamily.INC_TRIBONACCI_LUCAS, n, s)
    lhs = sum(incomplete_tl_number(n + i, s) for i in range(h))
    numerator = (incomplete_tl_number(n + h + 2, s + 1)
                 - incomplete_tl_number(n + 2, s + 1)
                 + incomplete_tl_number(n, s)
                 - incomplete_tl_number(n + h, s))
    half, remainder = divmod(numerator, 2)
    if remainder != 0:
        raise InternalConsistencyError(
            f"odd partial-sum numerator {numerator} at (n={n}, h={h}, s={s})")
    return lhs, half


def row_sum_lhs_rhs(n: int, mode: str = NUMBERS):
    """Both sides of the incomplete-table row-sum identity.

    With l = floor(n/2):
    LHS = sum_{s=0..l} K_n^(s);
    RHS = (l+1) K_n - sum_{i,j} (i*n/(n-i-j)) C(i,j) C(n-i-j, i) [x^...],
    n = i+j cells skipped, every division checked exact.
    """
    if n < 1:
        raise DomainError(f"row sum requires n >= 1, got {n}")
    l = n // 2
    if mode == POLYNOMIALS:
        lhs = IntPoly.zero()
        for s in range(l + 1):
            lhs = lhs + incomplete_tl_poly(n, s)
        rhs = (l + 1) * tribonacci_lucas_poly(n) - weighted_binomial_diagonal_sum(n, True)
        return lhs, rhs
    if mode != NUMBERS:
        raise DomainError(f"unknown mode {mode!r}")
    lhs = sum(incomplete_tl_number(n, s) for s in range(l + 1))
    rhs = ((l + 1) * tribonacci_lucas_number(n)
           - weighted_binomial_diagonal_sum(n, False))
    return lhs, rhs


HOM_POLY_37 = "hom_poly_37"
NONHOM_POLY_38 = "nonhom_poly_38"
HOM_NUM_39 = "hom_num_39"
NONHOM_NUM_310 = "nonhom_num_310"
TRI_NONHOM_15 = "tri_nonhom_15"

RECURRENCE_VARIANTS = (
    HOM_POLY_37, NONHOM_POLY_38, HOM_NUM_39, NONHOM_NUM_310, TRI_NONHOM_15,
)


def _eq15_corrections(n: int, s: int) -> IntPoly:
    # The two binomial correction sums of the non-homogeneous incomplete
    # Tribonacci recurrence; zero binomials are skipped, which keeps all
    # surviving powers nonnegative.
    terms = []
    for j in range(s + 1):
        c = comb(s, j) * comb(n - s - j, s)
        if c:
            power = 2 * n - 3 * (s + j)
            assert power >= 0
            terms.append((power + 1, c))  # the x * sum(...) part
        c = comb(s, j) * comb(n - s - j - 1, s)
        if c:
            power = 2 * n - 3 * (s + j) - 2
            assert power >= 0
            terms.append((power, c))
    return IntPoly.from_terms(terms)


def recurrence_step(n: int, s: int, variant: str) -> Tuple:
    """(directly computed value, recurrence-assembled value) for one step.

    hom_poly_37:     K_{n+3}^(s+1) vs x^2 K_{n+2}^(s+1) + x K_{n+1}^(s) + K_n^(s)
    nonhom_poly_38:  K_{n+3}^(s)   vs x^2 K_{n+2}^(s) + x K_{n+1}^(s) + K_n^(s)
                                      - x B(n+1-s, s)(x) - B(n-s, s)(x)
    hom_num_39 / nonhom_num_310: the same at x = 1
    tri_nonhom_15:   T_{n+3}^(s)   vs x^2 T_{n+2}^(s) + x T_{n+1}^(s) + T_n^(s)
                                      - the two binomial correction sums
    """
    if variant in (HOM_POLY_37, HOM_NUM_39):
        check_domain(IncompleteFamily.INC_TRIBONACCI_LUCAS, n, s)
        direct = incomplete_tl_poly(n + 3, s + 1)
        assembled = (incomplete_tl_poly(n + 2, s + 1).shifted(2)
                     + incomplete_tl_poly(n + 1, s).shifted(1)
                     + incomplete_tl_poly(n, s))
    elif variant in (NONHOM_POLY_38, NONHOM_NUM_310):
        check_domain(IncompleteFamily.INC_TRIBONACCI_LUCAS, n, s)
        direct = incomplete_tl_poly(n + 3, s)
        assembled = (incomplete_tl_poly(n + 2, s).shifted(2)
                     + incomplete_tl_poly(n + 1, s).shifted(1)
                     + incomplete_tl_poly(n, s)
                     - triangle_entry_poly(n + 1 - s, s).shifted(1)
                     - triangle_entry_poly(n - s, s))
    elif variant == TRI_NONHOM_15:
        check_domain(IncompleteFamily.INC_TRIBONACCI, n, s)
        direct = incomplete_tribonacci_poly(n + 3, s)
        assembled = (incomplete_tribonacci_poly(n + 2, s).shifted(2)
                     + incomplete_tribonacci_poly(n + 1, s).shifted(1)
                     + incomplete_tribonacci_poly(n, s)
                     - _eq15_corrections(n, s))
    else:
        raise DomainError(f"unknown recurrence variant {variant!r}")
    if variant in (HOM_NUM_39, NONHOM_NUM_310):
        return direct.evaluate(1), assembled.evaluate(1)
    return direct, assembled


__all__ = [
    "IncompleteFamily", "IncompleteIndex", "max_level", "min_index",
    "is_valid", "check_domain",
    "incomplete_tribonacci_poly", "incomplete_tribonacci_number",
    "incomplete_tl_poly", "incomplete_tl_number",
    "boundary_form", "EQ33", "EQ34", "EQ35", "EQ36",
    "tl_relation_rhs", "partial_sum_lhs_rhs", "row_sum_lhs_rhs",
    "recurrence_step", "RECURRENCE_VARIANTS",
    "HOM_POLY_37", "NONHOM_POLY_38", "HOM_NUM_39", "NONHOM_NUM_310",
    "TRI_NONHOM_15", "TRIANGLE_SUM", "BINOMIAL_SUM", "NUMBERS", "POLYNOMIALS",
]
