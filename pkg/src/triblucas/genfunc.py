"""Truncated formal power series in z and cleared rational generating functions.

Coefficients live in one of two rings per object: integer polynomials in x
(the symbolic mode) or exact rationals (after substituting a value for x).
Every generating function is normalized to a single numerator/denominator
pair of z-polynomials whose denominator has unit constant term, so series
expansion needs no coefficient division and stays exact.

The incomplete-Tribonacci generating function is

    Q_s(x, z) = z^(2s+1) * U_s(x, z),
    U_s = [T_{2s+1}(x) + z (T_{2s+2}(x) - x^2 T_{2s+1}(x)) + z^2 * n2
           - (x z^2 + z^3) (x + z)^s / (1 - x^2 z)^(s+1)]
          / (1 - x^2 z - x z^2 - z^3),

where the z^2 numerator term n2 has two variants kept side by side: the
``as_printed`` form T_{2s}(x) - 2 x^(s+1) and the ``corrected`` form
T_{2s}(x).  The corrected form is what the generic clearing lemma produces
once the sign convention is applied consistently: the binomial correction
sums enter the recurrence subtractively, so the lemma's forcing sequence is
their negation, which both negates the closed-form G and cancels the
x^(s+1) inside the z^2 head term.  The comparator confirms the corrected
form against direct double-sum evaluation and pins the printed form's first
mismatch at the z^2 slot of U_s (shifted power 2s+3) for every s.

The incomplete Tribonacci-Lucas generating function combines two Q's:

    W_s(x, z) = z^(-1) Q_s(x, z) + (x z + 2 z^2) Q_{s-1}(x, z)
                + 2 T_{2s-2}(x) z^(2s).

The trailing term is a boundary repair: the cross-family relation behind
the combination holds only from n = 2s+1 on, and at n = 2s the literal
combination loses exactly 2 T_{2s-2}(x) because that contribution sits
below Q_{s-1}'s shift.  For s = 1 it vanishes (T_0 = 0).  With the repair
the expansion generates the incomplete Tribonacci-Lucas family itself,
which is what the verification sweeps require.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Optional, Tuple, Union

from .errors import DomainError, ExpansionError
from .incomplete import (
    IncompleteFamily,
    incomplete_tl_poly,
    incomplete_tribonacci_poly,
    is_valid,
)
from .poly import IntPoly, poly_format
from .sequences import tribonacci_poly

Coeff = Union[int, Fraction, IntPoly]
XMode = Optional[Fraction]  # None means symbolic x


class GFVariant(enum.Enum):
    AS_PRINTED = "as_printed"
    CORRECTED = "corrected"


DEFAULT_ORDER = 64


@dataclass(frozen=True)
class PowerSeries:
    """A truncated series in z; exactly ``order`` coefficients are stored."""

    coeffs: Tuple[Coeff, ...]

    @property
    def order(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, power: int) -> Coeff:
        return self.coeffs[power]

    def to_json_list(self):
        return [render_coeff(c) for c in self.coeffs]


@dataclass(frozen=True)
class RationalGF:
    """numerator/denominator pair of z-polynomials times a z^shift prefactor.

    The denominator's z^0 coefficient must be the unit of the coefficient
    ring, which keeps expansion division-free.
    """

    numerator: Tuple[Coeff, ...]
    denominator: Tuple[Coeff, ...]
    shift: int = 0

    def __post_init__(self):
        if self.shift < 0:
            raise DomainError(f"shift must be nonnegative, got {self.shift}")
        if not self.denominator or not _is_one(self.denominator[0]):
            raise ExpansionError("denominator constant term must be 1")

    def to_json_dict(self) -> dict:
        return {
            "shift": self.shift,
            "numerator": [render_coeff(c) for c in self.numerator],
            "denominator": [render_coeff(c) for c in self.denominator],
        }


def render_coeff(c: Coeff) -> str:
    if isinstance(c, IntPoly):
        return poly_format(c)
    return str(c)


def _is_one(c: Coeff) -> bool:
    return c == 1


# -- z-polynomial helpers (tuples of ring coefficients, index = power of z) --

def _zadd(a: Tuple[Coeff, ...], b: Tuple[Coeff, ...]) -> Tuple[Coeff, ...]:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] = out[i] + c
    return tuple(out)


def _zneg(a: Tuple[Coeff, ...]) -> Tuple[Coeff, ...]:
    return tuple(-c for c in a)


def _zscale(a: Tuple[Coeff, ...], c: Coeff) -> Tuple[Coeff, ...]:
    return tuple(x * c for x in a)


def _zmul(a: Tuple[Coeff, ...], b: Tuple[Coeff, ...], zero: Coeff) -> Tuple[Coeff, ...]:
    out = [zero] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        for j, cb in enumerate(b):
            out[i + j] = out[i + j] + ca * cb
    return tuple(out)


def _zpow(a: Tuple[Coeff, ...], n: int, zero: Coeff, one: Coeff) -> Tuple[Coeff, ...]:
    result: Tuple[Coeff, ...] = (one,)
    for _ in range(n):
        result = _zmul(result, a, zero)
    return result


def series_expand(gf: RationalGF, order: int) -> PowerSeries:
    """Expand ``gf`` to exactly ``order`` coefficients.

    Solves denominator * P = numerator coefficient by coefficient (possible
    exactly because the denominator's constant term is 1), then applies the
    z^shift prefactor and re-truncates.
    """
    if order < 0:
        raise DomainError(f"order must be nonnegative, got {order}")
    return _expand_cached(gf, order)


@lru_cache(maxsize=None)
def _expand_cached(gf: RationalGF, order: int) -> PowerSeries:
    den = gf.denominator
    num = gf.numerator
    zero = den[0] * 0
    body = max(0, order - gf.shift)
    p = []
    dmax = len(den) - 1
    for k in range(body):
        acc = num[k] if k < len(num) else zero
        for j in range(1, min(k, dmax) + 1):
            dj = den[j]
            if not _is_zero(dj):
                acc = acc - dj * p[k - j]
        p.append(acc)
    coeffs = [zero] * min(gf.shift, order) + p
    return PowerSeries(tuple(coeffs[:order]))


def _is_zero(c: Coeff) -> bool:
    return c == 0


# -- generic non-homogeneous third-order clearing -----------------------------

@dataclass(frozen=True)
class Lemma9Spec:
    """Inputs for clearing S_n = a S_{n-1} + b S_{n-2} + c S_{n-3} + r_n.

    ``r`` is the forcing sequence: a RationalGF (exact closed form), a
    PowerSeries (the result is then only valid to that truncation), or None
    for the homogeneous case.
    """

    a: Coeff
    b: Coeff
    c: Coeff
    s0: Coeff
    s1: Coeff
    s2: Coeff
    r: Union[RationalGF, PowerSeries, None] = None


def lemma9_gf(spec: Lemma9Spec) -> RationalGF:
    """Generating function of S_n with numerator

    S0 - r0 + z (S1 - a S0 - r1) + z^2 (S2 - a S1 - b S0 - r2) + G(z)

    over 1 - a z - b z^2 - c z^3, where G is the generating function of r
    and r0, r1, r2 are its leading coefficients.
    """
    a, b, c = spec.a, spec.b, spec.c
    zero = a * 0
    one = zero + 1
    den = (one, zero - a, zero - b, zero - c)
    if spec.r is None:
        r0 = r1 = r2 = zero
    elif isinstance(spec.r, PowerSeries):
        if spec.r.order < 3:
            raise DomainError("forcing series must carry at least 3 coefficients")
        r0, r1, r2 = spec.r.coeffs[0], spec.r.coeffs[1], spec.r.coeffs[2]
    else:
        head = series_expand(spec.r, 3)
        r0, r1, r2 = head.coeffs
    head_poly = (spec.s0 - r0,
                 spec.s1 - a * spec.s0 - r1,
                 spec.s2 - a * spec.s1 - b * spec.s0 - r2)
    if spec.r is None:
        return RationalGF(head_poly, den, 0)
    if isinstance(spec.r, PowerSeries):
        return RationalGF(_zadd(head_poly, tuple(spec.r.coeffs)), den, 0)
    g_num = (zero,) * spec.r.shift + tuple(spec.r.numerator)
    numerator = _zadd(_zmul(head_poly, spec.r.denominator, zero), g_num)
    return RationalGF(numerator, _zmul(den, spec.r.denominator, zero), 0)


# -- the concrete incomplete-family generating functions ----------------------

class _Ring:
    """Constructors for one coefficient ring (symbolic x or substituted x)."""

    def __init__(self, x: XMode):
        self.xval = x
        if x is None:
            self.zero: Coeff = IntPoly.zero()
            self.one: Coeff = IntPoly.one()
            self.x: Coeff = IntPoly.x()
        else:
            self.zero = Fraction(0)
            self.one = Fraction(1)
            self.x = Fraction(x)

    def x_power(self, k: int, scale: int = 1) -> Coeff:
        if self.xval is None:
            return IntPoly.monomial(scale, k)
        return scale * self.x ** k

    def tpoly(self, k: int) -> Coeff:
        p = tribonacci_poly(k)
        if self.xval is None:
            return p
        return Fraction(p.evaluate(self.x))


def _q_parts(s: int, variant: GFVariant, ring: _Ring):
    # Cleared numerator A and denominator B of Q_s (without the z^(2s+1)).
    t1 = ring.tpoly(2 * s + 1)
    t2 = ring.tpoly(2 * s + 2)
    n2 = ring.tpoly(2 * s)
    if variant is GFVariant.AS_PRINTED:
        n2 = n2 - ring.x_power(s + 1, 2)
    head = (t1, t2 - ring.x_power(2) * t1, n2)
    m = (ring.one, -ring.x_power(2))                       # 1 - x^2 z
    d = (ring.one, -ring.x_power(2), -ring.x, -ring.one)   # 1 - x^2 z - x z^2 - z^3
    p = _zpow(m, s + 1, ring.zero, ring.one)
    x_plus_z = _zpow((ring.x, ring.one), s, ring.zero, ring.one)
    g = _zmul((ring.zero, ring.zero, ring.x, ring.one), x_plus_z, ring.zero)
    a = _zadd(_zmul(head, p, ring.zero), _zneg(g))
    b = _zmul(d, p, ring.zero)
    return a, b


@lru_cache(maxsize=None)
def q_gf(s: int, variant: GFVariant = GFVariant.CORRECTED,
         x: XMode = None) -> RationalGF:
    """The incomplete-Tribonacci generating function Q_s as a cleared pair.

    Denominators are cleared to (1 - x^2 z - x z^2 - z^3)(1 - x^2 z)^(s+1)
    and the z^(2s+1) prefactor is carried in ``shift``.  With ``x`` given,
    substitution happens before clearing and the coefficients are exact
    rationals.
    """
    if s < 0:
        raise DomainError(f"level must be nonnegative, got {s}")
    ring = _Ring(x)
    a, b = _q_parts(s, variant, ring)
    return RationalGF(a, b, 2 * s + 1)


@lru_cache(maxsize=None)
def w_gf(s: int, x: XMode = None) -> RationalGF:
    """The incomplete Tribonacci-Lucas generating function W_s (s >= 1).

    Assembled over the common denominator of Q_s and Q_{s-1} (corrected
    variant), with the z^(-1) absorbed into Q_s's shift and the boundary
    term 2 T_{2s-2}(x) z^(2s) restored; see the module docstring.
    """
    if s < 1:
        raise DomainError("the Tribonacci-Lucas generating function needs s >= 1")
    ring = _Ring(x)
    a_s, b_s = _q_parts(s, GFVariant.CORRECTED, ring)
    a_prev, _ = _q_parts(s - 1, GFVariant.CORRECTED, ring)
    m = (ring.one, -ring.x_power(2))
    lin = (ring.x, ring.one + ring.one)                    # x + 2z
    numerator = _zadd(a_s, _zmul(_zmul(lin, m, ring.zero), a_prev, ring.zero))
    repair = ring.tpoly(2 * s - 2)
    if not _is_zero(repair):
        numerator = _zadd(numerator, _zscale(b_s, repair + repair))
    return RationalGF(numerator, b_s, 2 * s)


@lru_cache(maxsize=None)
def q_gf_numbers_unshifted(s: int) -> RationalGF:
    """The x = 1 printed form without its z^(2s+1) prefactor.

    Kept solely for the errata comparison: its expansion matches the
    shifted printed form only after multiplying by z^(2s+1), so compared
    directly against the incomplete Tribonacci numbers it mismatches from
    z^0 on.
    """
    if s < 0:
        raise DomainError(f"level must be nonnegative, got {s}")
    ring = _Ring(Fraction(1))
    a, b = _q_parts(s, GFVariant.AS_PRINTED, ring)
    return RationalGF(a, b, 0)


def direct_incomplete_coeff(family: IncompleteFamily, n: int, s: int,
                            x: XMode) -> Coeff:
    """The directly computed series coefficient: the incomplete value at
    index n, or the ring zero when (n, s) is outside the family's domain."""
    if not is_valid(family, n, s):
        return IntPoly.zero() if x is None else Fraction(0)
    if family is IncompleteFamily.INC_TRIBONACCI:
        p = incomplete_tribonacci_poly(n, s)
    else:
        p = incomplete_tl_poly(n, s)
    if x is None:
        return p
    return Fraction(p.evaluate(Fraction(x)))


@dataclass(frozen=True)
class GFComparison:
    """Coefficientwise comparison of a generating function against direct values."""

    family: IncompleteFamily
    s: int
    variant: GFVariant
    x: XMode
    order: int
    series: PowerSeries
    mismatches: Tuple[Tuple[int, Coeff, Coeff], ...]  # (power, gf value, direct value)

    @property
    def ok(self) -> bool:
        return not self.mismatches

    @property
    def first_mismatch_power(self) -> Optional[int]:
        return self.mismatches[0][0] if self.mismatches else None


def gf_vs_direct(family: IncompleteFamily, s: int,
                 variant: GFVariant = GFVariant.CORRECTED,
                 x: XMode = None, order: int = DEFAULT_ORDER) -> GFComparison:
    """Expand the family's generating function and compare every coefficient
    below ``order`` against direct double-sum evaluation.

    The direct sums are the oracle; the closed-form function is the claim
    under test.  Out-of-domain indices contribute zero on the direct side.
    """
    if order < 1:
        raise DomainError(f"order must be >= 1, got {order}")
    if family is IncompleteFamily.INC_TRIBONACCI:
        gf = q_gf(s, variant, x)
    else:
        if variant is not GFVariant.CORRECTED:
            raise DomainError(
                "only the corrected variant exists for the Tribonacci-Lucas family")
        gf = w_gf(s, x)
    series = series_expand(gf, order)
    mismatches = []
    for k in range(order):
        expected = direct_incomplete_coeff(family, k, s, x)
        if series.coeffs[k] != expected:
            mismatches.append((k, series.coeffs[k], expected))
    return GFComparison(family, s, variant, x, order, series, tuple(mismatches))
