"""Certified root enclosures, Binet-type evaluation, and logarithmic heights.

The dominant root of the k-step characteristic polynomial is isolated by
exact rational bisection (signs are evaluated with Fraction arithmetic,
so the bracket is rigorous).  The full root set comes from a simultaneous
numeric solve followed by a posteriori certification: each approximation
z gets the radius deg * |p(z)| / |p'(z)| (evaluated in ball arithmetic,
so the radius itself is an upper bound), discs must be pairwise disjoint,
and the product of the enclosures must reconstruct the exact coefficients.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import mpmath
from mpmath import mp

from .balls import DEFAULT_PREC, ComplexBall, PrecisionError, RealBall, ball_sum
from .intpoly import IntPolynomial, char_poly

MIN_PREC = 64


def _check_prec(precision_bits: int) -> None:
    if precision_bits < MIN_PREC:
        raise ValueError(f"precision must be at least {MIN_PREC} bits")


def dominant_root(k: int, precision_bits: int = DEFAULT_PREC) -> RealBall:
    """The unique real root of the k-step polynomial in (2(1 - 2^-k), 2).

    Exact-sign bisection on Fraction endpoints: the returned ball is a
    proof-grade bracket of width <= 2^-(precision_bits + 4).
    """
    _check_prec(precision_bits)
    f = char_poly(k)
    lo = Fraction(2) * (1 - Fraction(1, 2**k))
    hi = Fraction(2)
    flo, fhi = f(lo), f(hi)
    if not (flo < 0 < fhi):
        raise PrecisionError(f"bracket endpoints do not straddle a root for k={k}")
    target = Fraction(1, 2 ** (precision_bits + 4))
    while hi - lo > target:
        midpt = (lo + hi) / 2
        if f(midpt) < 0:
            lo = midpt
        else:
            hi = midpt
    with mp.workprec(precision_bits + 64):
        ball = RealBall.from_endpoints(
            mpmath.mpf(lo.numerator) / lo.denominator - target,
            mpmath.mpf(hi.numerator) / hi.denominator + target,
            precision_bits,
        )
    return ball


def certify_roots(poly: IntPolynomial, precision_bits: int = DEFAULT_PREC) -> list[ComplexBall]:
    """Certified, pairwise-disjoint enclosures of all roots of poly.

    Ordered by decreasing modulus of the midpoints.  Raises
    PrecisionError when disjointness or coefficient reconstruction fails
    at the requested precision.
    """
    _check_prec(precision_bits)
    deg = poly.degree
    if deg < 1:
        raise ValueError("constant polynomial has no roots")
    if poly.coeffs[0] == 0:
        # Factor out the root at zero exactly.
        inner = IntPolynomial(poly.coeffs[1:])
        roots = certify_roots(inner, precision_bits) if inner.degree >= 1 else []
        roots.append(ComplexBall(0, 0, precision_bits))
        return roots
    with mp.workprec(precision_bits + 96):
        approx = mpmath.polyroots(
            [mpmath.mpf(c) for c in reversed(poly.coeffs)],
            maxsteps=200,
            extraprec=precision_bits // 2 + 64,
        )
    deriv = poly.derivative()
    balls = []
    for z in approx:
        point = ComplexBall(z, 0, precision_bits)
        pval = poly.eval_ball(point).modulus().upper()
        dval = deriv.eval_ball(point).modulus().lower()
        if dval <= 0:
            raise PrecisionError("derivative not bounded away from zero at a root")
        with mp.workprec(precision_bits + 64):
            radius = deg * pval / dval
        balls.append(ComplexBall(z, radius, precision_bits))
    for i in range(deg):
        for j in range(i + 1, deg):
            if balls[i].distance_lower(balls[j]) <= 0:
                raise PrecisionError("root enclosures overlap; raise precision")
    # Reconstruction: leading * prod (T - root_i) must contain the exact
    # coefficients.
    acc = [ComplexBall.exact_int(poly.leading, precision_bits)]
    for b in balls:
        nxt = [ComplexBall.exact_int(0, precision_bits)] * (len(acc) + 1)
        for i, c in enumerate(acc):
            nxt[i + 1] = nxt[i + 1] + c
            nxt[i] = nxt[i] + c * (-b)
        acc = nxt
    for coeff_ball, coeff in zip(acc, poly.coeffs):
        if not (coeff_ball.real_ball().contains(coeff) and coeff_ball.imag_ball().contains(0)):
            raise PrecisionError("coefficient reconstruction failed; raise precision")
    balls.sort(key=lambda b: (-abs(b.mid), -b.mid.real, -b.mid.imag))
    return balls


@dataclass(frozen=True)
class RootSet:
    """All roots of the k-step polynomial, certified and modulus-ordered."""

    k: int
    roots: tuple[ComplexBall, ...]
    dominant: RealBall

    def verify(self) -> None:
        """Check the modulus ordering and bracketing facts as certified facts."""
        k = self.k
        mods = [r.modulus() for r in self.roots]
        if not mods[0].certainly_gt(1):
            raise PrecisionError("dominant modulus not certified > 1")
        if k >= 2 and not mods[1].certainly_lt(1):
            raise PrecisionError("subdominant modulus not certified < 1")
        for a, b in zip(mods[1:], mods[2:]):
            if a.certainly_lt(b):
                raise PrecisionError("modulus ordering violated")
        low = Fraction(1, 3**k)
        if not mods[-1].certainly_gt(RealBall.from_fraction(low, self.dominant.prec)):
            raise PrecisionError("smallest modulus not certified > 3^-k")
        lo_bracket = Fraction(2) * (1 - Fraction(1, 2**k))
        if not (
            self.dominant.certainly_gt(RealBall.from_fraction(lo_bracket, self.dominant.prec))
            and self.dominant.certainly_lt(2)
        ):
            raise PrecisionError("dominant root bracket not certified")


@lru_cache(maxsize=None)
def all_roots(k: int, precision_bits: int = DEFAULT_PREC) -> RootSet:
    """Certified RootSet of the k-step characteristic polynomial."""
    if k < 2:
        raise ValueError(f"order must be >= 2, got {k}")
    balls = certify_roots(char_poly(k), precision_bits)
    dom = dominant_root(k, precision_bits)
    rs = RootSet(k=k, roots=tuple(balls), dominant=dom)
    rs.verify()
    return rs


def _binet_coefficient(root: ComplexBall, k: int) -> ComplexBall:
    """(r - 1) / (2 + (k+1)(r - 2)) for a root enclosure r."""
    one = ComplexBall.exact_int(1, root.prec)
    two = ComplexBall.exact_int(2, root.prec)
    kk = ComplexBall.exact_int(k + 1, root.prec)
    return (root - one) / (two + kk * (root - two))


def binet_eval(k: int, n: int, precision_bits: int = DEFAULT_PREC) -> RealBall:
    """Enclosure of the n-th k-step term from the power-sum formula.

    The enclosure provably contains the exact integer; width >= 1/2 is a
    precision failure because rounding would then be ambiguous.
    """
    if n < -(k - 2):
        raise ValueError(f"index {n} below the sequence start")
    rs = all_roots(k, precision_bits)
    terms = []
    for root in rs.roots:
        coeff = _binet_coefficient(root, k)
        terms.append(coeff * root.powi(n - 1))
    total = ball_sum(terms, precision_bits)
    real = RealBall(total.mid.real, total.rad + abs(total.mid.imag), precision_bits)
    if real.width() >= 0.5:
        raise PrecisionError("Binet enclosure too wide to round; raise precision")
    return real


def binet_int(k: int, n: int, precision_bits: int = DEFAULT_PREC) -> int:
    """Nearest integer of the Binet enclosure (certified when width < 1/2)."""
    ball = binet_eval(k, n, precision_bits)
    with mp.workprec(precision_bits):
        return int(mpmath.nint(ball.mid))


def weil_height(g: IntPolynomial, precision_bits: int = DEFAULT_PREC) -> RealBall:
    """Logarithmic height from a primitive integer polynomial.

    (1/d) (ln a0 + sum ln max(|root_i|, 1)) over certified enclosures of
    the roots of g, with a0 the positive leading coefficient.
    """
    if g.is_zero() or g.degree < 1:
        raise ValueError("height needs a nonconstant polynomial")
    if g.leading < 0 or g.content() != 1:
        raise ValueError("polynomial must be primitive with positive leading coefficient")
    roots = certify_roots(g, precision_bits)
    total = RealBall.exact_int(g.leading, precision_bits).ln()
    for r in roots:
        total = total + r.modulus().max_with(1).ln()
    return total / RealBall.exact_int(g.degree, precision_bits)


def log_abs(value: ComplexBall) -> RealBall:
    """Certified ln |z| of a ball excluding zero."""
    return value.modulus().ln()
