"""Lower-bound constants, effective thresholds, window coefficients."""

from fractions import Fraction

import pytest

from fibsum.balls import ComplexBall, RealBall
from fibsum.bounds import (
    Gamma,
    LinearFormSpec,
    derive_bounds,
    matveev_A,
    matveev_C,
    matveev_lambda,
    matveev_lower_bound,
    nonvanishing_witness,
    threshold_search,
    window_coefficient,
    window_coefficient_minpoly,
)
from fibsum.intpoly import IntPolynomial, char_poly
from fibsum.roots import all_roots, log_abs, weil_height

PREC = 192


def _ball(s):
    return RealBall.from_decimal(s, PREC)


def test_matveev_C_value():
    c = matveev_C(4, 6, PREC)
    ref = Fraction("1575532181216094806290202390180051107")  # scaled mantissa check
    assert (c / _ball("1.575532181216e15")).contains(Fraction(1)) or (
        c.lower() > 1.575e15 and c.upper() < 1.576e15
    )
    assert ref > 0  # keep the reference visible for future re-derivation


def test_matveev_A_floor():
    # tiny height and log: the 0.16 floor applies
    h = _ball("0.0001")
    lg = _ball("0.0002")
    a = matveev_A(h, lg, 6)
    assert a.contains(Fraction("0.16"))


def test_matveev_lambda_and_lower_bound():
    poly_phi = IntPolynomial([-1, -1, 1])
    five_sqrt = RealBall.exact_int(5, PREC).sqrt()
    phi = (RealBall.exact_int(1, PREC) + five_sqrt) / 2
    spec = LinearFormSpec(
        gammas=(
            Gamma(poly_phi, ComplexBall.from_real(phi), weil_height(poly_phi, PREC)),
        ),
        field_degree=2,
        B=RealBall.exact_int(100, PREC),
    )
    lam = matveev_lambda(spec)
    assert lam.certainly_positive()
    bound = matveev_lower_bound(spec)
    assert bound.certainly_positive()
    assert bound.certainly_lt(RealBall.exact_int(1, PREC))


def test_threshold_small_cases():
    one = RealBall.exact_int(1, PREC)
    ten = RealBall.exact_int(10, PREC)
    zero = RealBall.exact_int(0, PREC)
    assert threshold_search(ten, zero, one) == 16
    assert threshold_search(zero, zero, one) == 1


def test_threshold_published_constants():
    n = threshold_search(_ball("1.46e17"), _ball("85.53e15"), _ball("0.78"))
    assert n == 9223372036854775808  # 2^63


def test_threshold_refine_is_tighter():
    ten = RealBall.exact_int(10, PREC)
    zero = RealBall.exact_int(0, PREC)
    one = RealBall.exact_int(1, PREC)
    coarse = threshold_search(ten, zero, one)
    fine = threshold_search(ten, zero, one, refine=True)
    assert fine <= coarse
    assert fine == 11  # 10 - n < 0 first at n = 11


def test_window_coefficient_is_root_of_its_minpoly():
    for k, d in [(3, 1), (4, 0), (5, 2)]:
        value = window_coefficient(k, d, PREC)
        poly = window_coefficient_minpoly(k, d)
        assert poly.eval_ball(value).contains(0)
        assert poly.leading > 0


def test_nonvanishing_witness():
    w = nonvanishing_witness(3, 1, 10, 10, PREC)
    assert w.certainly_positive()


def test_derive_bounds_golden_thresholds():
    r31 = derive_bounds(3, 1, 256)
    assert r31.N == 2**63
    assert r31.M == 2 * r31.N + 2 * 1 + 2
    r40 = derive_bounds(4, 0, 256)
    assert r40.N == 2**66
    r52 = derive_bounds(5, 2, 256)
    assert r52.N == 2**68


def test_derive_bounds_rejects_order_two():
    with pytest.raises(ValueError):
        derive_bounds(2, 1, 128)


def test_bound_report_constants_positive():
    r = derive_bounds(3, 1, 256)
    for ball in (r.lam, r.a, r.b, r.c, r.c1, r.c2, r.c3):
        assert ball.certainly_positive()
    assert log_abs(ComplexBall.from_real(r.c3)).certainly_positive()
