"""Effective finiteness bounds for window sums landing in the Fibonacci sequence.

Builds the explicit lower-bound constant for a linear form in logarithms
(the standard C * prod A_i shape), assembles the final inequality
a + b*ln(n+2) - c*n > 0 that every solution index must satisfy, and
solves for the first power of two where the inequality certifiably
fails.  All numerics are ball arithmetic, so the resulting thresholds
are sound over-approximations.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .balls import DEFAULT_PREC, ComplexBall, PrecisionError, RealBall
from .intpoly import IntPolynomial, char_poly, eliminate_quotient
from .roots import all_roots, certify_roots, log_abs, weil_height


@dataclass(frozen=True)
class Gamma:
    """One multiplicand of the linear form: algebraic value plus its data."""

    minimal_poly: IntPolynomial
    value: ComplexBall
    height: RealBall


@dataclass(frozen=True)
class LinearFormSpec:
    """The data feeding the lower-bound constant for gamma_1^b_1 ... - 1."""

    gammas: tuple[Gamma, ...]
    field_degree: int
    exponents: Optional[tuple[Fraction, ...]] = None
    B: Optional[RealBall] = None

    def __post_init__(self):
        if not self.gammas:
            raise ValueError("at least one gamma required")
        if self.field_degree < 1:
            raise ValueError("field degree must be >= 1")


def matveev_C(n_terms: int, field_degree: int, precision_bits: int = DEFAULT_PREC) -> RealBall:
    """1.4 * 30^(n+3) * n^4.5 * l^2 * (1 + ln l) as a certified ball."""
    if n_terms < 1 or field_degree < 1:
        raise ValueError("n_terms and field_degree must be >= 1")
    prec = precision_bits
    c = RealBall.from_decimal("1.4", prec)
    c = c * RealBall.exact_int(30, prec).powi(n_terms + 3)
    # n^4.5 = sqrt(n^9), exact integer under the square root
    c = c * RealBall.exact_int(n_terms**9, prec).sqrt()
    c = c * RealBall.exact_int(field_degree**2, prec)
    c = c * (RealBall.exact_int(1, prec) + RealBall.exact_int(field_degree, prec).ln())
    return c


def matveev_A(
    height: RealBall, log_abs_gamma: RealBall, field_degree: int
) -> RealBall:
    """max(l * h, |log gamma|, 0.16), the minimal admissible choice."""
    prec = height.prec
    lh = height * RealBall.exact_int(field_degree, prec)
    return lh.max_with(abs(log_abs_gamma)).max_with(RealBall.from_decimal("0.16", prec))


def matveev_lambda(spec: LinearFormSpec) -> RealBall:
    """C(n, l) * prod A_i for the given form."""
    prec = min(g.height.prec for g in spec.gammas)
    lam = matveev_C(len(spec.gammas), spec.field_degree, prec)
    for g in spec.gammas:
        lam = lam * matveev_A(g.height, log_abs(g.value), spec.field_degree)
    return lam


def matveev_lower_bound(spec: LinearFormSpec, lam: Optional[RealBall] = None) -> RealBall:
    """(e * B)^(-lambda), valid whenever the form itself is nonzero."""
    if spec.B is None:
        raise ValueError("spec carries no exponent bound B")
    if lam is None:
        lam = matveev_lambda(spec)
    one = RealBall.exact_int(1, lam.prec)
    return (-(lam * (one + spec.B.ln()))).exp()


# ---------------------------------------------------------------------------
# The concrete linear form of the window-sum problem


def _alpha_phi(precision_bits: int) -> RealBall:
    """(1 + sqrt 5) / 2, the Fibonacci dominant root, as a ball."""
    five = RealBall.exact_int(5, precision_bits)
    return (RealBall.exact_int(1, precision_bits) + five.sqrt()) / 2


def _beta_abs(precision_bits: int) -> RealBall:
    """(sqrt 5 - 1) / 2 = |second Fibonacci root|."""
    five = RealBall.exact_int(5, precision_bits)
    return (five.sqrt() - RealBall.exact_int(1, precision_bits)) / 2


def window_coefficient(k: int, d: int, precision_bits: int = DEFAULT_PREC) -> RealBall:
    """(r^(d+1) - 1) / ((k+1) r - 2k) at the dominant root r of order k.

    This is the constant multiplying r^(n-1) once the geometric window
    sum is telescoped.
    """
    dom = all_roots(k, precision_bits).dominant
    num = dom.powi(d + 1) - 1
    den = dom * (k + 1) - 2 * k
    return num / den


def window_coefficient_minpoly(k: int, d: int) -> IntPolynomial:
    """Primitive polynomial vanishing at window_coefficient(k, d).

    Obtained by resultant elimination; for irreducible input it is the
    minimal polynomial (or a power of it when the value generates a
    proper subfield, which leaves the height formula unchanged).
    """
    num = IntPolynomial([-1] + [0] * d + [1])  # T^(d+1) - 1
    den = IntPolynomial([-2 * k, k + 1])
    return eliminate_quotient(char_poly(k), num, den)


def nonvanishing_witness(
    k: int, d: int, n: int, m: int, precision_bits: int = DEFAULT_PREC
) -> RealBall:
    """Certified positive enclosure of |c * r^(n-1) * phi^(-m) * sqrt5 - 1|.

    c is window_coefficient(k, d).  A nonzero value is guaranteed by the
    norm/valuation argument; if the enclosure cannot exclude zero at this
    precision the call raises (retry with more bits).
    """
    if k < 3:
        raise ValueError("order must be >= 3")
    if n < -(k - 2) or m < 0:
        raise ValueError("indices out of range")
    prec = precision_bits
    c = window_coefficient(k, d, prec)
    dom = all_roots(k, prec).dominant
    phi = _alpha_phi(prec)
    five = RealBall.exact_int(5, prec)
    form = c * dom.powi(n - 1) * phi.powi(-m) * five.sqrt() - 1
    witness = abs(form)
    if not witness.certainly_positive():
        raise PrecisionError("cannot certify the linear form away from zero")
    return witness


@dataclass(frozen=True)
class BoundReport:
    """Effective bound bundle for one (k, d): inequality and thresholds.

    Soundness contract: every solution index n of the window-sum equation
    at this (k, d) satisfies a + b*ln(n+2) - c*n > 0, hence n < N and
    the Fibonacci index satisfies m < M = 2N + 2d + 2.
    """

    k: int
    d: int
    lam: RealBall
    a: RealBall
    b: RealBall
    c: RealBall
    N: int
    M: int
    c1: RealBall
    c2: RealBall
    c3: RealBall
    precision_bits: int


def _inequality_value(a: RealBall, b: RealBall, c: RealBall, n: int) -> RealBall:
    prec = min(a.prec, b.prec, c.prec)
    ln_term = (RealBall.exact_int(n, prec) + 2).ln()
    return a + b * ln_term - c * RealBall.exact_int(n, prec)


def threshold_search(a: RealBall, b: RealBall, c: RealBall, refine: bool = False) -> int:
    """First n in 1, 2, 4, ... where a + b*ln(n+2) - c*n is certifiably < 0.

    Mirrors an exponential ramp-up: the result is a valid threshold but
    not necessarily the smallest one.  With refine=True a binary search
    narrows to the smallest power-of-two granule's interior point.
    """
    if not c.certainly_positive():
        raise ValueError("decay coefficient must be certifiably positive")
    n = 1
    while not _inequality_value(a, b, c, n).certainly_negative():
        n *= 2
        if n > 2**1024:
            raise PrecisionError("threshold search did not terminate; widen precision")
    if not refine or n == 1:
        return n
    lo, hi = n // 2, n  # holds at lo (or uncertain), fails at hi
    while hi - lo > 1:
        midpt = (lo + hi) // 2
        if _inequality_value(a, b, c, midpt).certainly_negative():
            hi = midpt
        else:
            lo = midpt
    return hi


def derive_bounds(k: int, d: int, precision_bits: int = DEFAULT_PREC) -> BoundReport:
    """Run the full inequality pipeline for one (k, d) and solve for N.

    The quadratic-field case k = 2 is excluded: it is settled exactly by
    the closed-form characterization, not by logarithm bounds.
    """
    if k == 2:
        raise ValueError("k = 2 is handled exactly; bounds start at k = 3")
    if k < 3 or d < 0:
        raise ValueError("need k >= 3 and d >= 0")
    prec = precision_bits
    rs = all_roots(k, prec)
    dom = rs.dominant
    denom = dom * (k + 1) - 2 * k
    c1 = (dom - 1) / denom
    c3 = (dom.powi(d + 1) - 1) / denom

    c2 = RealBall.exact_int(0, prec)
    for root in rs.roots[1:]:
        one = ComplexBall.exact_int(1, prec)
        two = ComplexBall.exact_int(2, prec)
        kk = ComplexBall.exact_int(k + 1, prec)
        c2 = c2 + ((root - one) / (two + kk * (root - two))).modulus()

    # The four multiplicands of the linear form and their heights.
    phi = _alpha_phi(prec)
    five_sqrt = RealBall.exact_int(5, prec).sqrt()
    poly_c3 = window_coefficient_minpoly(k, d)
    poly_phi = IntPolynomial([-1, -1, 1])
    poly_s5 = IntPolynomial([-5, 0, 1])
    gammas = (
        Gamma(poly_c3, ComplexBall.from_real(c3), weil_height(poly_c3, prec)),
        Gamma(char_poly(k), ComplexBall.from_real(dom), weil_height(char_poly(k), prec)),
        Gamma(poly_phi, ComplexBall.from_real(phi), weil_height(poly_phi, prec)),
        Gamma(poly_s5, ComplexBall.from_real(five_sqrt), weil_height(poly_s5, prec)),
    )
    # Compositum of the order-k field with Q(sqrt 5): degree 2k is always
    # admissible (too large never invalidates the bound).
    ell = 2 * k
    spec = LinearFormSpec(gammas=gammas, field_degree=ell)
    lam = matveev_lambda(spec)

    # Tail coefficients: with r an upper bound on the subdominant modulus,
    # the non-dominant contribution is at most q*(r/phi)^n + |beta|^(2n)
    # where q = c2 * sqrt5 * (1 + r + ... + r^d) / r.
    r = rs.roots[1].modulus()
    s_d = RealBall.exact_int(0, prec)
    for j in range(d + 1):
        s_d = s_d + r.powi(j)
    q = c2 * five_sqrt * s_d / r
    beta = _beta_abs(prec)
    decay_main = (phi / r).ln()
    decay_tail = (RealBall.exact_int(1, prec) / beta.powi(2)).ln()
    c_coeff = decay_main.min_with(decay_tail)
    if not c_coeff.certainly_positive():
        raise PrecisionError("decay coefficient not certified positive")

    # 2n + 2d + 2 <= 2*t*(n+2) for all n >= 0 with t = max(1, (d+1)/2).
    t_d = Fraction(max(Fraction(1), Fraction(d + 1, 2)))
    a_coeff = lam * (RealBall.exact_int(1, prec) + (RealBall.from_fraction(2 * t_d, prec)).ln())
    a_coeff = a_coeff + (q + 1).ln()
    b_coeff = lam

    N = threshold_search(a_coeff, b_coeff, c_coeff)
    return BoundReport(
        k=k,
        d=d,
        lam=lam,
        a=a_coeff,
        b=b_coeff,
        c=c_coeff,
        N=N,
        M=2 * N + 2 * d + 2,
        c1=c1,
        c2=c2,
        c3=c3,
        precision_bits=prec,
    )
