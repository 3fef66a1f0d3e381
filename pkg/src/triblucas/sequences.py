"""The four base families and a floating-point closed-form cross-check.

Tribonacci numbers      T_{n+1} = T_n + T_{n-1} + T_{n-2},  T_0 = 0, T_1 = T_2 = 1
Tribonacci-Lucas        K_{n+1} = K_n + K_{n-1} + K_{n-2},  K_0 = 3, K_1 = 1, K_2 = 3
Tribonacci polys        T_{n+3}(x) = x^2 T_{n+2}(x) + x T_{n+1}(x) + T_n(x),
                        T_0(x) = 0, T_1(x) = 1, T_2(x) = x^2
Tribonacci-Lucas polys  same recurrence with K_0(x) = 3, K_1(x) = x^2, K_2(x) = x^4 + 2x

Evaluating either polynomial family at x = 1 recovers the number family.
The closed forms over the characteristic roots of t^3 = t^2 + t + 1 are
implemented as floating-point checks only; the iterative recurrences are
always the source of truth.
"""

from __future__ import annotations

import enum
import threading
from dataclasses import dataclass
from typing import Callable, List, Sequence, TypeVar

import mpmath

from .errors import DomainError, NumericalInstabilityError
from .poly import IntPoly

V = TypeVar("V")


class SequenceFamily(enum.Enum):
    TRIBONACCI_NUMBER = "tribonacci"
    TRIBONACCI_LUCAS_NUMBER = "tribonacci-lucas"
    TRIBONACCI_POLY = "tribonacci-poly"
    TRIBONACCI_LUCAS_POLY = "tribonacci-lucas-poly"


class _GrowingCache:
    """Append-only memo of an order-3 additive recurrence, safe for concurrent use."""

    def __init__(self, initial: Sequence[V], step: Callable[[V, V, V], V]):
        self._values: List[V] = list(initial)
        self._step = step
        self._lock = threading.Lock()

    def get(self, n: int) -> V:
        if n < 0:
            raise DomainError(f"index must be nonnegative, got {n}")
        if n < len(self._values):
            return self._values[n]
        with self._lock:
            v = self._values
            while len(v) <= n:
                v.append(self._step(v[-1], v[-2], v[-3]))
            return v[n]


def _poly_step(a: IntPoly, b: IntPoly, c: IntPoly) -> IntPoly:
    return a.shifted(2) + b.shifted(1) + c


_T_NUMBERS = _GrowingCache([0, 1, 1], lambda a, b, c: a + b + c)
_K_NUMBERS = _GrowingCache([3, 1, 3], lambda a, b, c: a + b + c)
_T_POLYS = _GrowingCache(
    [IntPoly.zero(), IntPoly.one(), IntPoly.monomial(1, 2)], _poly_step)
_K_POLYS = _GrowingCache(
    [IntPoly.constant(3), IntPoly.monomial(1, 2), IntPoly((0, 2, 0, 0, 1))],
    _poly_step)


def tribonacci_number(n: int) -> int:
    """T_n by the exact recurrence (memoized, iterative)."""
    return _T_NUMBERS.get(n)


def tribonacci_lucas_number(n: int) -> int:
    """K_n by the exact recurrence (memoized, iterative)."""
    return _K_NUMBERS.get(n)


def tribonacci_poly(n: int) -> IntPoly:
    """T_n(x); degree 2n-2 for n >= 1, with T_n(1) = T_n."""
    return _T_POLYS.get(n)


def tribonacci_lucas_poly(n: int) -> IntPoly:
    """K_n(x); degree 2n for n >= 1, with K_n(1) = K_n."""
    return _K_POLYS.get(n)


@dataclass(frozen=True)
class BinetRoots:
    """Floating approximations to the roots of t^3 - t^2 - t - 1.

    ``alpha`` is the real root (~1.8392867552); ``beta``/``gamma`` are the
    conjugate pair; ``w`` is the primitive cube root of unity used by the
    radical expressions.  All values carry ``precision`` significant bits.
    """

    alpha: mpmath.mpc
    beta: mpmath.mpc
    gamma: mpmath.mpc
    w: mpmath.mpc
    precision: int

    def vieta_residuals(self) -> tuple:
        """|sum - 1|, |pairsum + 1|, |product - 1| for the three roots."""
        a, b, g = self.alpha, self.beta, self.gamma
        return (abs(a + b + g - 1), abs(a * b + a * g + b * g + 1),
                abs(a * b * g - 1))


def binet_roots(precision: int = 64) -> BinetRoots:
    """Characteristic roots by complex root-finding at ``precision`` bits.

    Vieta residuals are guaranteed below 2^(-precision/2); a failure of that
    bound raises :class:`NumericalInstabilityError`.
    """
    if precision < 53:
        raise DomainError(f"precision must be at least 53 bits, got {precision}")
    with mpmath.workprec(precision + 16):
        roots = [mpmath.mpc(r)
                 for r in mpmath.polyroots([1, -1, -1, -1], extraprec=precision)]
        # one real root, one conjugate pair; beta is the positive-imag one
        roots.sort(key=lambda r: abs(mpmath.im(r)))
        alpha = roots[0]
        beta, gamma = sorted(roots[1:], key=lambda r: mpmath.im(r), reverse=True)
        w = mpmath.mpc(-1, mpmath.sqrt(3)) / 2
        found = BinetRoots(alpha, beta, gamma, w, precision)
        if max(found.vieta_residuals()) > mpmath.mpf(2) ** (-precision / 2):
            raise NumericalInstabilityError(
                "root refinement failed the Vieta residual bound; "
                "request higher precision")
        return found


def binet_roots_from_radicals(precision: int = 64) -> BinetRoots:
    """The same roots via the nested-radical expressions; cross-check path."""
    if precision < 53:
        raise DomainError(f"precision must be at least 53 bits, got {precision}")
    with mpmath.workprec(precision + 16):
        s33 = mpmath.sqrt(33)
        a_cube = mpmath.cbrt(19 + 3 * s33)
        b_cube = mpmath.cbrt(19 - 3 * s33)
        w = mpmath.mpc(-1, mpmath.sqrt(3)) / 2
        alpha = (1 + a_cube + b_cube) / 3
        beta = (1 + w * a_cube + w ** 2 * b_cube) / 3
        gamma = (1 + w ** 2 * a_cube + w * b_cube) / 3
        return BinetRoots(mpmath.mpc(alpha), beta, gamma, w, precision)


_NUMBER_FAMILIES = {
    SequenceFamily.TRIBONACCI_NUMBER,
    SequenceFamily.TRIBONACCI_LUCAS_NUMBER,
}


def binet_estimate(n: int, family: SequenceFamily,
                   precision: int = 64) -> mpmath.mpf:
    """Closed-form estimate of T_n or K_n over the characteristic roots.

    K_n = alpha^n + beta^n + gamma^n;
    T_n = alpha^(n+1)/((alpha-beta)(alpha-gamma)) + (two symmetric terms).

    The imaginary residue must stay below 1e-6 of the magnitude (it is then
    discarded); otherwise :class:`NumericalInstabilityError` suggests a
    higher precision.
    """
    if n < 0:
        raise DomainError(f"index must be nonnegative, got {n}")
    if family not in _NUMBER_FAMILIES:
        raise DomainError(f"no closed-form estimate for family {family!r}")
    roots = binet_roots(precision)
    with mpmath.workprec(precision + 32):
        a, b, g = roots.alpha, roots.beta, roots.gamma
        if family is SequenceFamily.TRIBONACCI_LUCAS_NUMBER:
            value = a ** n + b ** n + g ** n
        else:
            value = (a ** (n + 1) / ((a - b) * (a - g))
                     + b ** (n + 1) / ((b - a) * (b - g))
                     + g ** (n + 1) / ((g - a) * (g - b)))
        magnitude = max(abs(value), mpmath.mpf(1))
        if abs(mpmath.im(value)) > 1e-6 * magnitude:
            raise NumericalInstabilityError(
                f"imaginary residue {mpmath.im(value)} too large for n={n}; "
                "request higher precision")
        return mpmath.re(value)
