import random
from fractions import Fraction

import pytest

from triblucas.errors import DomainError, ExpansionError
from triblucas.genfunc import (
    GFVariant,
    Lemma9Spec,
    PowerSeries,
    RationalGF,
    direct_incomplete_coeff,
    gf_vs_direct,
    lemma9_gf,
    q_gf,
    q_gf_numbers_unshifted,
    series_expand,
    w_gf,
)
from triblucas.incomplete import (
    IncompleteFamily,
    incomplete_tl_poly,
    incomplete_tribonacci_poly,
)
from triblucas.poly import IntPoly, poly_parse
from triblucas.sequences import tribonacci_poly

TRIB = IncompleteFamily.INC_TRIBONACCI
TL = IncompleteFamily.INC_TRIBONACCI_LUCAS


def ints(series):
    return list(series.coeffs)


def test_expand_geometric():
    gf = RationalGF((1,), (1, -1))
    assert ints(series_expand(gf, 5)) == [1, 1, 1, 1, 1]


def test_expand_lucas_numbers():
    gf = RationalGF((3, -2, -1), (1, -1, -1, -1))
    assert ints(series_expand(gf, 7)) == [3, 1, 3, 7, 11, 21, 39]


def test_expand_polynomial_geometric():
    one = IntPoly.one()
    x2 = IntPoly.monomial(1, 2)
    gf = RationalGF((one,), (one, -x2))
    assert ints(series_expand(gf, 3)) == [one, x2, IntPoly.monomial(1, 4)]


def test_expand_applies_shift():
    gf = RationalGF((1,), (1, -1), shift=3)
    assert ints(series_expand(gf, 6)) == [0, 0, 0, 1, 1, 1]
    assert ints(series_expand(gf, 2)) == [0, 0]


def test_denominator_unit_term_required():
    with pytest.raises(ExpansionError):
        RationalGF((1,), (2, 1))
    with pytest.raises(ExpansionError):
        RationalGF((1,), ())


def test_expansion_times_denominator_is_numerator():
    rng = random.Random(7)
    for _ in range(40):
        num = tuple(rng.randint(-6, 6) for _ in range(rng.randint(1, 5)))
        den = (1,) + tuple(rng.randint(-4, 4) for _ in range(rng.randint(0, 4)))
        order = 24
        p = series_expand(RationalGF(num, den), order).coeffs
        for k in range(order):
            conv = sum(den[j] * p[k - j] for j in range(min(k, len(den) - 1) + 1))
            expected = num[k] if k < len(num) else 0
            assert conv == expected, (num, den, k)


def test_lemma9_homogeneous_examples():
    spec = Lemma9Spec(1, 1, 1, 3, 1, 3)
    assert ints(series_expand(lemma9_gf(spec), 6)) == [3, 1, 3, 7, 11, 21]
    spec = Lemma9Spec(1, 1, 1, 0, 1, 1)
    assert ints(series_expand(lemma9_gf(spec), 6)) == [0, 1, 1, 2, 4, 7]
    spec = Lemma9Spec(0, 0, 0, 5, 0, 0)
    assert ints(series_expand(lemma9_gf(spec), 5)) == [5, 0, 0, 0, 0]


def _unrolled(a, b, c, s0, s1, s2, forcing, order):
    values = [s0, s1, s2]
    for n in range(3, order):
        values.append(a * values[n - 1] + b * values[n - 2]
                      + c * values[n - 3] + forcing[n])
    return values[:order]


def test_lemma9_random_soundness_rational_forcing():
    rng = random.Random(2024)
    order = 32
    for _ in range(30):
        a, b, c, s0, s1, s2 = (rng.randint(-5, 5) for _ in range(6))
        r_num = tuple(rng.randint(-5, 5) for _ in range(rng.randint(1, 4)))
        r_den = (1,) + tuple(rng.randint(-3, 3) for _ in range(rng.randint(0, 2)))
        shift = rng.choice([0, 0, 1, 2])
        forcing_gf = RationalGF(r_num, r_den, shift)
        forcing = series_expand(forcing_gf, order).coeffs
        expected = _unrolled(a, b, c, s0, s1, s2, forcing, order)
        got = series_expand(
            lemma9_gf(Lemma9Spec(a, b, c, s0, s1, s2, forcing_gf)), order)
        assert ints(got) == expected


def test_lemma9_truncated_series_forcing():
    rng = random.Random(99)
    order = 20
    for _ in range(10):
        a, b, c, s0, s1, s2 = (rng.randint(-4, 4) for _ in range(6))
        forcing = tuple(rng.randint(-4, 4) for _ in range(order))
        expected = _unrolled(a, b, c, s0, s1, s2, forcing, order)
        got = series_expand(
            lemma9_gf(Lemma9Spec(a, b, c, s0, s1, s2, PowerSeries(forcing))),
            order)
        assert ints(got) == expected


def test_lemma9_short_series_forcing_rejected():
    with pytest.raises(DomainError):
        lemma9_gf(Lemma9Spec(1, 1, 1, 0, 1, 1, PowerSeries((0, 0))))


def _zmul(a, b):
    out = [IntPoly.zero()] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        for j, cb in enumerate(b):
            out[i + j] = out[i + j] + ca * cb
    return out


def test_lemma9_reproduces_corrected_q():
    # Clearing the shifted incomplete-Tribonacci recurrence through the
    # generic lemma must give the same series as the corrected closed form:
    # the forcing sequence is the negated correction sums, with generating
    # function -(x z^2 + z^3)(x + z)^s / (1 - x^2 z)^(s+1).
    x = IntPoly.x()
    one = IntPoly.one()
    for s in range(4):
        m = [one, -IntPoly.monomial(1, 2)]
        p = [one]
        for _ in range(s + 1):
            p = _zmul(p, m)
        x_plus_z = [one]
        for _ in range(s):
            x_plus_z = _zmul(x_plus_z, [x, one])
        g_num = _zmul([IntPoly.zero(), IntPoly.zero(), x, one], x_plus_z)
        forcing = RationalGF(tuple(-c for c in g_num), tuple(p))
        spec = Lemma9Spec(
            a=IntPoly.monomial(1, 2), b=x, c=one,
            s0=tribonacci_poly(2 * s + 1),
            s1=tribonacci_poly(2 * s + 2),
            s2=tribonacci_poly(2 * s + 3) - IntPoly.monomial(1, s + 1),
            r=forcing)
        order = 20
        via_lemma = series_expand(lemma9_gf(spec), order)
        direct = series_expand(q_gf(s, GFVariant.CORRECTED), order + 2 * s + 1)
        for k in range(order):
            assert via_lemma[k] == direct[k + 2 * s + 1], (s, k)


def test_q_corrected_number_examples():
    series = series_expand(q_gf(0, GFVariant.CORRECTED, Fraction(1)), 6)
    assert ints(series) == [0, 1, 1, 1, 1, 1]
    series = series_expand(q_gf(1, GFVariant.CORRECTED, Fraction(1)), 7)
    assert ints(series) == [0, 0, 0, 2, 4, 6, 8]


def test_q_printed_number_example():
    series = series_expand(q_gf(1, GFVariant.AS_PRINTED, Fraction(1)), 7)
    assert ints(series) == [0, 0, 0, 2, 4, 4, 6]


def test_q_shift_law():
    for s in range(5):
        series = series_expand(q_gf(s), 2 * s + 3)
        for k in range(2 * s + 1):
            assert series[k] == IntPoly.zero()
        assert series[2 * s + 1] == tribonacci_poly(2 * s + 1)


def test_q_symbolic_coefficients_match_direct():
    series = series_expand(q_gf(1), 8)
    assert series[4] == incomplete_tribonacci_poly(4, 1)
    assert series[7] == incomplete_tribonacci_poly(7, 1)


def test_w_number_examples():
    assert ints(series_expand(w_gf(1, Fraction(1)), 7)) == [0, 0, 3, 7, 9, 11, 13]
    assert ints(series_expand(w_gf(2, Fraction(1)), 7)) == [0, 0, 0, 0, 11, 21, 37]


def test_w_symbolic_coefficient():
    series = series_expand(w_gf(1), 5)
    assert series[4] == poly_parse("x^8 + 4*x^5 + 4*x^2")


def test_w_boundary_coefficient_is_complete_polynomial():
    # The z^(2s) coefficient must be the full K_2s(x); it depends on the
    # restored boundary term for s >= 2.
    for s in range(1, 5):
        series = series_expand(w_gf(s), 2 * s + 1)
        assert series[2 * s] == incomplete_tl_poly(2 * s, s), s


def test_w_needs_positive_level():
    with pytest.raises(DomainError):
        w_gf(0)


def test_gf_vs_direct_corrected_passes():
    cmp = gf_vs_direct(TRIB, 3, GFVariant.CORRECTED, Fraction(1), 40)
    assert cmp.ok and cmp.mismatches == ()
    cmp = gf_vs_direct(TL, 1, GFVariant.CORRECTED, None, 16)
    assert cmp.ok


def test_gf_vs_direct_printed_first_mismatch():
    cmp = gf_vs_direct(TRIB, 0, GFVariant.AS_PRINTED, Fraction(1), 10)
    assert not cmp.ok
    assert cmp.first_mismatch_power == 3  # the z^2 slot of the unshifted factor


def test_gf_vs_direct_rational_point():
    cmp = gf_vs_direct(TRIB, 2, GFVariant.CORRECTED, Fraction(1, 2), 20)
    assert cmp.ok
    cmp = gf_vs_direct(TL, 2, GFVariant.CORRECTED, Fraction(1, 2), 20)
    assert cmp.ok


def test_gf_vs_direct_rejects_printed_tl():
    with pytest.raises(DomainError):
        gf_vs_direct(TL, 1, GFVariant.AS_PRINTED, Fraction(1), 8)


def test_unshifted_printed_form():
    series = series_expand(q_gf_numbers_unshifted(1), 6)
    shifted = series_expand(q_gf(1, GFVariant.AS_PRINTED, Fraction(1)), 9)
    assert [series[k] for k in range(6)] == [shifted[k + 3] for k in range(6)]
    assert series[0] != direct_incomplete_coeff(TRIB, 0, 1, Fraction(1))


def test_serialization_shapes():
    gf = q_gf(0, GFVariant.CORRECTED, Fraction(1))
    payload = gf.to_json_dict()
    assert set(payload) == {"shift", "numerator", "denominator"}
    assert payload["shift"] == 1
    series = series_expand(gf, 4)
    assert series.to_json_list() == ["0", "1", "1", "1"]
    assert series.order == 4


def test_negative_shift_rejected():
    with pytest.raises(DomainError):
        RationalGF((1,), (1,), shift=-1)
