"""The Tribonacci-Lucas triangle and its polynomial analogue.

Number triangle entries B(n, i) satisfy

    B(n+1, i) = B(n, i) + B(n, i-1) + B(n-1, i-1)

with B(n, 0) = 1 and B(n, n) = 2 for n >= 1 and apex B(0, 0) = 3; the
polynomial triangle uses

    B(n+1, i)(x) = x^2 B(n, i)(x) + x B(n, i-1)(x) + B(n-1, i-1)(x)

with B(n, 0)(x) = x^(2n), B(n, n)(x) = 2 x^n and apex 3.  Each entry also
has a closed binomial form (checked against the recurrence entry by entry),
and rising-diagonal sums of either triangle rebuild the Tribonacci-Lucas
numbers / polynomials.
"""

from __future__ import annotations

import enum
import threading
from dataclasses import dataclass
from math import comb
from typing import List, Tuple, Union

from .errors import DomainError, InternalConsistencyError
from .poly import IntPoly, poly_format

Entry = Union[int, IntPoly]

RECURRENCE = "recurrence"
CLOSED_FORM = "closed_form"


class TriangleKind(enum.Enum):
    NUMBERS = "numbers"
    POLYNOMIALS = "polynomials"


@dataclass(frozen=True)
class TriangleTable:
    """Rows 0..row_count-1 of one triangle; row n holds columns 0..n."""

    kind: TriangleKind
    rows: Tuple[Tuple[Entry, ...], ...]

    def to_json_dict(self) -> dict:
        """Ragged array of strings plus the kind tag."""
        render = str if self.kind is TriangleKind.NUMBERS else poly_format
        return {
            "kind": self.kind.value,
            "rows": [[render(entry) for entry in row] for row in self.rows],
        }


def exact_div(numerator: int, denominator: int) -> int:
    """Integer division that must be exact; a remainder is a transcription bug."""
    q, r = divmod(numerator, denominator)
    if r != 0:
        raise InternalConsistencyError(
            f"inexact division {numerator}/{denominator} in a closed form")
    return q


class _RowCache:
    def __init__(self, poly: bool):
        self._poly = poly
        self._rows: List[List[Entry]] = []
        self._lock = threading.Lock()

    def rows(self, count: int) -> List[List[Entry]]:
        if count > len(self._rows):
            with self._lock:
                while len(self._rows) < count:
                    self._rows.append(self._next_row())
        return self._rows[:count]

    def _next_row(self) -> List[Entry]:
        n = len(self._rows)
        if n == 0:
            return [IntPoly.constant(3)] if self._poly else [3]
        prev = self._rows[n - 1]
        prev2 = self._rows[n - 2] if n >= 2 else []
        row: List[Entry] = []
        for i in range(n + 1):
            if i == 0:
                row.append(IntPoly.monomial(1, 2 * n) if self._poly else 1)
            elif i == n:
                row.append(IntPoly.monomial(2, n) if self._poly else 2)
            else:
                a = prev[i]
                b = prev[i - 1]
                c = prev2[i - 1] if i - 1 < len(prev2) else (IntPoly.zero() if self._poly else 0)
                if self._poly:
                    row.append(a.shifted(2) + b.shifted(1) + c)
                else:
                    row.append(a + b + c)
        return row


_NUMBER_ROWS = _RowCache(poly=False)
_POLY_ROWS = _RowCache(poly=True)


def _check_cell(n: int, i: int) -> None:
    if n < 0:
        raise DomainError(f"row must be nonnegative, got {n}")
    if i < 0 or i > n:
        raise DomainError(f"column {i} outside 0..{n} in row {n}")


def _closed_terms(n: int, i: int):
    # Nonzero closed-form terms of B(n, i)(x): coefficient and power pairs.
    # Only valid for n > i; zero-binomial terms are skipped, which also keeps
    # every surviving power nonnegative.
    for j in range(i + 1):
        binoms = comb(i, j) * comb(n - j, i)
        if binoms == 0:
            continue
        coeff = exact_div((n + i) * binoms, n - j)
        power = 2 * n - i - 3 * j
        assert power >= 0
        yield coeff, power


def triangle_entry_number(n: int, i: int, method: str = RECURRENCE) -> int:
    """B(n, i), by the table recurrence or the closed binomial sum."""
    _check_cell(n, i)
    if method == RECURRENCE:
        return _NUMBER_ROWS.rows(n + 1)[n][i]
    if method != CLOSED_FORM:
        raise DomainError(f"unknown method {method!r}")
    if n == i:
        return 3 if n == 0 else 2
    return sum(coeff for coeff, _ in _closed_terms(n, i))


def triangle_entry_poly(n: int, i: int, method: str = RECURRENCE) -> IntPoly:
    """B(n, i)(x), by the table recurrence or the closed binomial sum."""
    _check_cell(n, i)
    if method == RECURRENCE:
        return _POLY_ROWS.rows(n + 1)[n][i]
    if method != CLOSED_FORM:
        raise DomainError(f"unknown method {method!r}")
    if n == i:
        return IntPoly.constant(3) if n == 0 else IntPoly.monomial(2, n)
    return IntPoly.from_terms((power, coeff) for coeff, power in _closed_terms(n, i))


def triangle_rows(kind: TriangleKind, row_count: int) -> TriangleTable:
    """Rows 0..row_count-1 computed by recurrence."""
    if row_count < 1:
        raise DomainError(f"row_count must be >= 1, got {row_count}")
    cache = _NUMBER_ROWS if kind is TriangleKind.NUMBERS else _POLY_ROWS
    return TriangleTable(kind, tuple(tuple(row) for row in cache.rows(row_count)))


def diagonal_sum(kind: TriangleKind, n: int) -> Entry:
    """Rising-diagonal sum: sum of B(n-i, i) for i = 0..floor(n/2).

    Equals K_n for the number triangle and K_n(x) for the polynomial one.
    """
    if n < 0:
        raise DomainError(f"index must be nonnegative, got {n}")
    if kind is TriangleKind.NUMBERS:
        return sum(triangle_entry_number(n - i, i) for i in range(n // 2 + 1))
    total = IntPoly.zero()
    for i in range(n // 2 + 1):
        total = total + triangle_entry_poly(n - i, i)
    return total


def _binomial_diagonal_terms(n: int, weight_by_i: bool = False):
    # Terms of the closed double sum over 0 <= j <= i <= floor(n/2), with the
    # n == i+j cells skipped (the stated side condition) and zero binomials
    # dropped before any power is formed.
    for i in range(n // 2 + 1):
        for j in range(i + 1):
            if n == i + j:
                continue
            binoms = comb(i, j) * comb(n - i - j, i)
            if binoms == 0:
                continue
            scale = i * n if weight_by_i else n
            coeff = exact_div(scale * binoms, n - i - j)
            power = 2 * n - 3 * (i + j)
            assert power >= 0
            yield coeff, power


def binomial_diagonal_sum(kind: TriangleKind, n: int) -> Entry:
    """The closed double-binomial form of the rising-diagonal sum (n >= 1)."""
    if n < 1:
        raise DomainError(f"index must be >= 1, got {n}")
    if kind is TriangleKind.NUMBERS:
        return sum(coeff for coeff, _ in _binomial_diagonal_terms(n))
    return IntPoly.from_terms(
        (power, coeff) for coeff, power in _binomial_diagonal_terms(n))


def weighted_binomial_diagonal_sum(n: int, polynomial: bool) -> Entry:
    """The i-weighted variant of the double sum used by the row-sum identity."""
    if n < 1:
        raise DomainError(f"index must be >= 1, got {n}")
    terms = _binomial_diagonal_terms(n, weight_by_i=True)
    if polynomial:
        return IntPoly.from_terms((power, coeff) for coeff, power in terms)
    return sum(coeff for coeff, _ in terms)
