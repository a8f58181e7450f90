"""Certified root enclosures, power-sum evaluation, logarithmic heights."""

from fractions import Fraction

import pytest

from fibsum.balls import PrecisionError, RealBall
from fibsum.intpoly import IntPolynomial, char_poly
from fibsum.roots import (
    all_roots,
    binet_eval,
    binet_int,
    dominant_root,
    weil_height,
)
from fibsum.sequences import kbonacci

PREC = 192

GOLDEN_RATIO = Fraction(
    "1.61803398874989484820458683436563811772030917980576286213544862270526046281890"
)


def test_dominant_root_order_two_is_golden_ratio():
    dom = dominant_root(2, PREC)
    assert dom.contains(GOLDEN_RATIO) or abs(
        Fraction(str(dom.mid)) - GOLDEN_RATIO
    ) < Fraction(1, 10**40)
    # certified bracket strictly inside (1, 2)
    assert dom.lower() > 1.5 and dom.upper() < 1.7


def test_dominant_root_bracket():
    for k in range(2, 10):
        dom = dominant_root(k, 128)
        assert dom.lower() > float(2 * (1 - Fraction(1, 2) ** k)) - 1e-9
        assert dom.upper() < 2


def test_dominant_root_satisfies_polynomial():
    for k in (2, 3, 5, 8):
        dom = dominant_root(k, PREC)
        assert char_poly(k).eval_ball(dom).contains(0)


def test_rootset_invariants():
    for k in range(2, 13):
        rs = all_roots(k, 128)
        assert len(rs.roots) == k
        rs.verify()  # raises on any uncertified ordering fact
        mods = [r.modulus() for r in rs.roots]
        assert mods[0].certainly_gt(RealBall.exact_int(1, 128))
        for m in mods[1:]:
            assert m.certainly_lt(RealBall.exact_int(1, 128))
            assert m.certainly_gt(RealBall.from_fraction(Fraction(1, 3**k), 128))


def test_binet_matches_recurrence():
    for k in (2, 3, 4, 7):
        for n in range(1, 80):
            assert binet_int(k, n, 192) == kbonacci(k, n)


def test_binet_enclosure_contains_integer():
    ball = binet_eval(3, 50, 192)
    assert ball.contains(kbonacci(3, 50))
    assert ball.width() < 0.5


def test_binet_insufficient_precision_raises():
    with pytest.raises(PrecisionError):
        binet_eval(2, 6000, 64)


def test_weil_height_goldens():
    h_phi = weil_height(IntPolynomial([-1, -1, 1]), PREC)
    assert h_phi.lower() > 0.2405 and h_phi.upper() < 0.2407
    h_s5 = weil_height(IntPolynomial([-5, 0, 1]), PREC)
    assert h_s5.lower() > 0.8046 and h_s5.upper() < 0.8048
    h_t = weil_height(char_poly(3), PREC)
    assert h_t.lower() > 0.2030 and h_t.upper() < 0.2032
    h_c3 = weil_height(IntPolynomial([-1, 6, -20, 26]), PREC)
    assert h_c3.lower() > 1.0859 and h_c3.upper() < 1.0862


def test_height_of_integer_polynomial():
    # h(2) = ln 2
    h = weil_height(IntPolynomial([-2, 1]), PREC)
    assert h.contains(Fraction("0.693147180559945309417232")) or (
        0.6931 < h.lower() < h.upper() < 0.6932
    )


def test_precision_scaling():
    wide = dominant_root(3, 64)
    tight = dominant_root(3, 512)
    assert tight.width() < wide.width()
    import mpmath

    assert wide.contains(Fraction(mpmath.nstr(tight.mid, 50, min_fixed=-60, max_fixed=60)))
