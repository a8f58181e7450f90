"""Midpoint-radius arithmetic: enclosures must contain the true value."""

from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from fibsum.balls import ComplexBall, RealBall, ball_sum

PREC = 128

fractions = st.fractions(
    min_value=Fraction(-1000), max_value=Fraction(1000), max_denominator=997
)


def ball(q):
    return RealBall.from_fraction(q, PREC)


@given(fractions, fractions)
@settings(max_examples=100, deadline=None)
def test_add_sub_mul_contain_exact(a, b):
    assert ball(a) + ball(b)
    assert (ball(a) + ball(b)).contains(a + b)
    assert (ball(a) - ball(b)).contains(a - b)
    assert (ball(a) * ball(b)).contains(a * b)


@given(fractions, fractions.filter(lambda q: abs(q) > Fraction(1, 100)))
@settings(max_examples=100, deadline=None)
def test_div_contains_exact(a, b):
    assert (ball(a) / ball(b)).contains(a / b)


@given(fractions, st.integers(0, 12))
@settings(max_examples=100, deadline=None)
def test_powi_contains_exact(a, e):
    assert ball(a).powi(e).contains(a**e)


@given(fractions.filter(lambda q: q != 0), st.integers(-6, -1))
@settings(max_examples=60, deadline=None)
def test_negative_powi_contains_exact(a, e):
    assert ball(a).powi(e).contains(Fraction(1) / a ** (-e))


@given(fractions.filter(lambda q: q > 0))
@settings(max_examples=60, deadline=None)
def test_sqrt_squares_back(a):
    root = ball(a).sqrt()
    assert (root * root).contains(a)


@given(fractions.filter(lambda q: q > 0))
@settings(max_examples=60, deadline=None)
def test_ln_exp_roundtrip(a):
    assert ball(a).ln().exp().contains(a)


def test_exact_int_has_zero_radius():
    b = RealBall.exact_int(123456789, PREC)
    assert b.rad == 0
    assert b.contains(123456789)


def test_from_decimal():
    b = RealBall.from_decimal("0.1", PREC)
    assert b.contains(Fraction(1, 10))
    assert b.width() < 1e-30


def test_endpoints_ordering():
    b = ball(Fraction(22, 7))
    assert b.lower() <= b.upper()
    assert b.lower() <= float(22 / 7) <= b.upper() or b.contains(Fraction(22, 7))


def test_certainly_comparisons():
    two = RealBall.exact_int(2, PREC)
    three = RealBall.exact_int(3, PREC)
    assert two.certainly_lt(three)
    assert three.certainly_gt(two)
    assert (three - two).certainly_positive()
    assert (two - three).certainly_negative()
    wide = RealBall(0.0, 1.0, PREC)
    assert not wide.certainly_positive()
    assert not wide.certainly_negative()


def test_max_min_with():
    a, b = ball(Fraction(3)), ball(Fraction(5))
    assert a.max_with(b).contains(5)
    assert a.min_with(b).contains(3)


def test_ball_sum():
    parts = [ball(Fraction(i, 7)) for i in range(20)]
    total = ball_sum(parts, PREC)
    assert total.contains(sum(Fraction(i, 7) for i in range(20)))


@given(fractions, fractions, fractions, fractions)
@settings(max_examples=60, deadline=None)
def test_complex_mul_contains_exact(ar, ai, br, bi):
    a = ComplexBall.from_real(ball(ar)) + ComplexBall.from_real(ball(ai)) * _i()
    b = ComplexBall.from_real(ball(br)) + ComplexBall.from_real(ball(bi)) * _i()
    prod = a * b
    assert prod.real_ball().contains(ar * br - ai * bi)
    assert prod.imag_ball().contains(ar * bi + ai * br)


def _i():
    import mpmath

    return ComplexBall(mpmath.mpc(0, 1), 0, PREC)


def test_complex_modulus():
    import mpmath

    z = ComplexBall(mpmath.mpc(3, 4), 0, PREC)
    assert z.modulus().contains(5)
