import mpmath
import pytest

from triblucas.errors import DomainError, NumericalInstabilityError
from triblucas.poly import IntPoly, poly_format
from triblucas.sequences import (
    BinetRoots,
    SequenceFamily,
    binet_estimate,
    binet_roots,
    binet_roots_from_radicals,
    tribonacci_lucas_number,
    tribonacci_lucas_poly,
    tribonacci_number,
    tribonacci_poly,
)

T_FIRST = [0, 1, 1, 2, 4, 7, 13, 24, 44, 81, 149]
K_FIRST = [3, 1, 3, 7, 11, 21, 39, 71, 131, 241, 443]


def test_tribonacci_first_values():
    assert [tribonacci_number(n) for n in range(11)] == T_FIRST


def test_tribonacci_lucas_first_values():
    assert [tribonacci_lucas_number(n) for n in range(11)] == K_FIRST


def test_negative_index_rejected():
    with pytest.raises(DomainError):
        tribonacci_number(-1)
    with pytest.raises(DomainError):
        tribonacci_lucas_poly(-3)


def test_poly_initial_conditions():
    assert tribonacci_poly(0) == IntPoly.zero()
    assert tribonacci_poly(1) == IntPoly.one()
    assert tribonacci_poly(2) == IntPoly.monomial(1, 2)
    assert tribonacci_lucas_poly(0) == IntPoly([3])
    assert tribonacci_lucas_poly(1) == IntPoly.monomial(1, 2)
    assert tribonacci_lucas_poly(2) == IntPoly([0, 2, 0, 0, 1])


def test_listed_polynomials():
    assert poly_format(tribonacci_poly(5)) == "x^8 + 3*x^5 + 3*x^2"
    assert poly_format(tribonacci_lucas_poly(6)) == \
        "x^12 + 6*x^9 + 15*x^6 + 14*x^3 + 3"
    assert poly_format(tribonacci_lucas_poly(7)) == \
        "x^14 + 7*x^11 + 21*x^8 + 28*x^5 + 14*x^2"


def test_polys_specialize_to_numbers_at_1():
    for n in range(41):
        assert tribonacci_poly(n).evaluate(1) == tribonacci_number(n)
        assert tribonacci_lucas_poly(n).evaluate(1) == tribonacci_lucas_number(n)


def test_degree_law():
    for n in range(1, 41):
        assert tribonacci_poly(n).degree == 2 * n - 2
        assert tribonacci_lucas_poly(n).degree == 2 * n
    assert tribonacci_lucas_poly(0) == 3


def test_memoized_agrees_with_plain_unroll():
    t = [0, 1, 1]
    k = [3, 1, 3]
    for _ in range(200):
        t.append(t[-1] + t[-2] + t[-3])
        k.append(k[-1] + k[-2] + k[-3])
    for n in range(201):
        assert tribonacci_number(n) == t[n]
        assert tribonacci_lucas_number(n) == k[n]


def test_binet_roots_alpha_and_vieta():
    roots = binet_roots(64)
    assert abs(mpmath.re(roots.alpha) - 1.8392867552) < 1e-9
    assert abs(mpmath.im(roots.alpha)) < 1e-15
    residuals = roots.vieta_residuals()
    assert max(residuals) < 1e-9
    assert max(residuals) < mpmath.mpf(2) ** (-roots.precision / 2)


def test_binet_roots_match_radical_expressions():
    found = binet_roots(80)
    radical = binet_roots_from_radicals(80)
    for a, b in [(found.alpha, radical.alpha), (found.beta, radical.beta),
                 (found.gamma, radical.gamma)]:
        assert abs(a - b) < 1e-18


def test_binet_precision_floor():
    with pytest.raises(DomainError):
        binet_roots(32)
    with pytest.raises(DomainError):
        binet_estimate(3, SequenceFamily.TRIBONACCI_NUMBER, precision=13)


def test_binet_estimate_zeroth_powers():
    est = binet_estimate(0, SequenceFamily.TRIBONACCI_LUCAS_NUMBER)
    assert abs(est - 3) < 1e-9


def test_binet_estimate_vieta_sum():
    est = binet_estimate(1, SequenceFamily.TRIBONACCI_LUCAS_NUMBER)
    assert abs(est - 1) < 1e-9


def test_binet_estimate_k6():
    est = binet_estimate(6, SequenceFamily.TRIBONACCI_LUCAS_NUMBER)
    assert abs(est - 39) <= 1e-6 * 39


def test_binet_estimate_sweep_both_families():
    for n in range(41):
        for family, exact in [
            (SequenceFamily.TRIBONACCI_NUMBER, tribonacci_number(n)),
            (SequenceFamily.TRIBONACCI_LUCAS_NUMBER, tribonacci_lucas_number(n)),
        ]:
            est = binet_estimate(n, family, precision=64)
            assert abs(est - exact) <= 1e-6 * max(1, exact)


def test_binet_estimate_rejects_polynomial_families():
    with pytest.raises(DomainError):
        binet_estimate(3, SequenceFamily.TRIBONACCI_POLY)


def test_binet_estimate_flags_large_imaginary_residue(monkeypatch):
    import triblucas.sequences as seq
    good = binet_roots(64)
    # A conjugate-symmetry-breaking perturbation leaves a visible imaginary part.
    broken = BinetRoots(good.alpha, good.beta * mpmath.mpc(1, 0.01), good.gamma,
                        good.w, good.precision)
    monkeypatch.setattr(seq, "binet_roots", lambda precision: broken)
    with pytest.raises(NumericalInstabilityError):
        seq.binet_estimate(9, SequenceFamily.TRIBONACCI_LUCAS_NUMBER)


def test_concurrent_cache_growth_matches_serial():
    from concurrent.futures import ThreadPoolExecutor

    serial = [tribonacci_lucas_poly(n) for n in range(380, 420)]
    with ThreadPoolExecutor(max_workers=8) as pool:
        concurrent = list(pool.map(tribonacci_lucas_poly, range(380, 420)))
    assert concurrent == serial
    with ThreadPoolExecutor(max_workers=8) as pool:
        numbers = list(pool.map(tribonacci_number, [500] * 16))
    assert len(set(numbers)) == 1
