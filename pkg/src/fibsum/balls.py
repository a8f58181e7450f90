"""Midpoint-radius ("ball") arithmetic on top of mpmath.

Every value carries an explicit precision in bits and a rigorous error
radius: the true quantity lies in [mid - rad, mid + rad] (or in the disc
of radius rad around mid for complex balls).  All operations round
outward: midpoints are computed with guard bits and the radius is padded
by a bound on the rounding error, so a ball computed here is a certified
enclosure whenever its inputs were.
"""

from __future__ import annotations

from fractions import Fraction

import mpmath
from mpmath import mp, mpc, mpf

# Extra working bits beyond the nominal precision of a ball.  mpmath
# rounds elementary operations to within a few ulp, so computing at
# prec + GUARD_BITS and padding by 2**(8 - (prec + GUARD_BITS)) * |mid|
# dominates the rounding error of each step.
GUARD_BITS = 32

DEFAULT_PREC = 256


class PrecisionError(ArithmeticError):
    """A certified result could not be produced at the requested precision.

    Retryable: callers should repeat the computation with more bits.
    """


def _workprec(prec: int) -> int:
    return prec + GUARD_BITS


def _pad(mid, prec: int):
    """Upper bound on the rounding error of one mpmath op at _workprec(prec)."""
    if mid == 0:
        return mpf(0)
    return abs(mid) * mpf(2) ** (8 - _workprec(prec))


class RealBall:
    """A real number known to lie within [mid - rad, mid + rad]."""

    __slots__ = ("mid", "rad", "prec")

    def __init__(self, mid, rad=0, prec: int = DEFAULT_PREC):
        # mpf values carry their full mantissa; converting an existing mpf
        # would re-round it at the ambient context precision, so keep it.
        with mp.workprec(_workprec(prec)):
            self.mid = mid if isinstance(mid, mpf) else mpf(mid)
            self.rad = rad if isinstance(rad, mpf) else mpf(rad)
        self.prec = prec
        if self.rad < 0:
            raise ValueError("negative radius")

    # -- constructors ------------------------------------------------------

    @classmethod
    def exact_int(cls, n: int, prec: int = DEFAULT_PREC) -> "RealBall":
        with mp.workprec(_workprec(prec)):
            m = mpf(n)
        # Huge integers may not be representable exactly at this precision.
        rad = mpf(0) if int(m) == n else _pad(m, prec)
        return cls(m, rad, prec)

    @classmethod
    def from_fraction(cls, q: Fraction, prec: int = DEFAULT_PREC) -> "RealBall":
        with mp.workprec(_workprec(prec)):
            m = mpf(q.numerator) / mpf(q.denominator)
        return cls(m, _pad(m, prec), prec)

    @classmethod
    def from_decimal(cls, s: str, prec: int = DEFAULT_PREC) -> "RealBall":
        """Parse a decimal literal exactly, then round outward once."""
        return cls.from_fraction(Fraction(s), prec)

    @classmethod
    def from_endpoints(cls, lo, hi, prec: int = DEFAULT_PREC) -> "RealBall":
        with mp.workprec(_workprec(prec)):
            lo = lo if isinstance(lo, mpf) else mpf(lo)
            hi = hi if isinstance(hi, mpf) else mpf(hi)
            if hi < lo:
                raise ValueError("endpoints out of order")
            mid = (lo + hi) / 2
            rad = (hi - lo) / 2
        return cls(mid, rad + _pad(mid, prec) + _pad(rad, prec), prec)

    # -- accessors ---------------------------------------------------------

    def lower(self):
        with mp.workprec(_workprec(self.prec)):
            return self.mid - self.rad - _pad(self.mid, self.prec)

    def upper(self):
        with mp.workprec(_workprec(self.prec)):
            return self.mid + self.rad + _pad(self.mid, self.prec)

    def width(self):
        return 2 * self.rad

    def __repr__(self):
        return f"RealBall({self.mid} ± {self.rad}, {self.prec} bits)"

    # -- arithmetic --------------------------------------------------------

    def _coerce(self, other) -> "RealBall":
        if isinstance(other, RealBall):
            return other
        if isinstance(other, int):
            return RealBall.exact_int(other, self.prec)
        if isinstance(other, Fraction):
            return RealBall.from_fraction(other, self.prec)
        return RealBall(mpf(other), 0, self.prec)

    def __add__(self, other) -> "RealBall":
        o = self._coerce(other)
        prec = min(self.prec, o.prec)
        with mp.workprec(_workprec(prec)):
            mid = self.mid + o.mid
            rad = self.rad + o.rad
        return RealBall(mid, rad + _pad(mid, prec), prec)

    __radd__ = __add__

    def __neg__(self) -> "RealBall":
        with mp.workprec(_workprec(self.prec)):
            mid = -self.mid
        return RealBall(mid, self.rad, self.prec)

    def __sub__(self, other) -> "RealBall":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "RealBall":
        return self._coerce(other) + (-self)

    def __mul__(self, other) -> "RealBall":
        o = self._coerce(other)
        prec = min(self.prec, o.prec)
        with mp.workprec(_workprec(prec)):
            mid = self.mid * o.mid
            rad = abs(self.mid) * o.rad + abs(o.mid) * self.rad + self.rad * o.rad
        return RealBall(mid, rad + _pad(mid, prec), prec)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "RealBall":
        o = self._coerce(other)
        prec = min(self.prec, o.prec)
        with mp.workprec(_workprec(prec)):
            denom_lo = abs(o.mid) - o.rad
            if denom_lo <= 0:
                raise PrecisionError("division by a ball containing zero")
            mid = self.mid / o.mid
            rad = (self.rad * abs(o.mid) + abs(self.mid) * o.rad) / (abs(o.mid) * denom_lo)
        return RealBall(mid, rad + _pad(mid, prec), prec)

    def __rtruediv__(self, other) -> "RealBall":
        return self._coerce(other) / self

    def __abs__(self) -> "RealBall":
        lo, hi = self.lower(), self.upper()
        if lo >= 0:
            return self
        if hi <= 0:
            return -self
        return RealBall.from_endpoints(0, max(-lo, hi), self.prec)

    def ln(self) -> "RealBall":
        lo, hi = self.lower(), self.upper()
        if lo <= 0:
            raise PrecisionError("log of a ball touching zero")
        with mp.workprec(_workprec(self.prec)):
            return RealBall.from_endpoints(mpmath.log(lo), mpmath.log(hi), self.prec)

    def exp(self) -> "RealBall":
        with mp.workprec(_workprec(self.prec)):
            return RealBall.from_endpoints(
                mpmath.exp(self.lower()), mpmath.exp(self.upper()), self.prec
            )

    def sqrt(self) -> "RealBall":
        lo, hi = self.lower(), self.upper()
        if lo < 0:
            raise PrecisionError("sqrt of a ball crossing zero")
        with mp.workprec(_workprec(self.prec)):
            return RealBall.from_endpoints(mpmath.sqrt(lo), mpmath.sqrt(hi), self.prec)

    def powi(self, e: int) -> "RealBall":
        """Integer power by interval endpoint analysis."""
        if e < 0:
            return RealBall.exact_int(1, self.prec) / self.powi(-e)
        if e == 0:
            return RealBall.exact_int(1, self.prec)
        lo, hi = self.lower(), self.upper()
        with mp.workprec(_workprec(self.prec)):
            plo, phi = lo**e, hi**e
            if e % 2 == 0 and lo < 0:
                if hi < 0:
                    plo, phi = phi, plo
                else:
                    plo, phi = mpf(0), max(plo, phi)
        return RealBall.from_endpoints(plo, phi, self.prec)

    def max_with(self, other) -> "RealBall":
        o = self._coerce(other)
        prec = min(self.prec, o.prec)
        return RealBall.from_endpoints(
            max(self.lower(), o.lower()), max(self.upper(), o.upper()), prec
        )

    def min_with(self, other) -> "RealBall":
        o = self._coerce(other)
        prec = min(self.prec, o.prec)
        return RealBall.from_endpoints(
            min(self.lower(), o.lower()), min(self.upper(), o.upper()), prec
        )

    # -- certified comparisons --------------------------------------------

    def certainly_lt(self, other) -> bool:
        o = self._coerce(other)
        return self.upper() < o.lower()

    def certainly_gt(self, other) -> bool:
        o = self._coerce(other)
        return self.lower() > o.upper()

    def certainly_positive(self) -> bool:
        return self.lower() > 0

    def certainly_negative(self) -> bool:
        return self.upper() < 0

    def contains(self, x) -> bool:
        x = mpf(x) if not isinstance(x, (int, Fraction)) else x
        if isinstance(x, Fraction):
            with mp.workprec(_workprec(self.prec) + 64):
                x = mpf(x.numerator) / mpf(x.denominator)
        return self.lower() <= x <= self.upper()


class ComplexBall:
    """A complex number known to lie within the disc |z - mid| <= rad."""

    __slots__ = ("mid", "rad", "prec")

    def __init__(self, mid, rad=0, prec: int = DEFAULT_PREC):
        with mp.workprec(_workprec(prec)):
            self.mid = mid if isinstance(mid, mpc) else mpc(mid)
            self.rad = rad if isinstance(rad, mpf) else mpf(rad)
        self.prec = prec
        if self.rad < 0:
            raise ValueError("negative radius")

    @classmethod
    def exact_int(cls, n: int, prec: int = DEFAULT_PREC) -> "ComplexBall":
        rb = RealBall.exact_int(n, prec)
        return cls(rb.mid, rb.rad, prec)

    @classmethod
    def from_real(cls, rb: RealBall) -> "ComplexBall":
        return cls(rb.mid, rb.rad, rb.prec)

    def __repr__(self):
        return f"ComplexBall({self.mid} ± {self.rad}, {self.prec} bits)"

    def _coerce(self, other) -> "ComplexBall":
        if isinstance(other, ComplexBall):
            return other
        if isinstance(other, RealBall):
            return ComplexBall.from_real(other)
        if isinstance(other, int):
            return ComplexBall.exact_int(other, self.prec)
        return ComplexBall(mpc(other), 0, self.prec)

    def __add__(self, other) -> "ComplexBall":
        o = self._coerce(other)
        prec = min(self.prec, o.prec)
        with mp.workprec(_workprec(prec)):
            mid = self.mid + o.mid
            rad = self.rad + o.rad
        return ComplexBall(mid, rad + 2 * _pad(abs(mid), prec), prec)

    __radd__ = __add__

    def __neg__(self) -> "ComplexBall":
        with mp.workprec(_workprec(self.prec)):
            mid = -self.mid
        return ComplexBall(mid, self.rad, self.prec)

    def __sub__(self, other) -> "ComplexBall":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "ComplexBall":
        return self._coerce(other) + (-self)

    def __mul__(self, other) -> "ComplexBall":
        o = self._coerce(other)
        prec = min(self.prec, o.prec)
        with mp.workprec(_workprec(prec)):
            mid = self.mid * o.mid
            am, bm = abs(self.mid), abs(o.mid)
            rad = am * o.rad + bm * self.rad + self.rad * o.rad
        return ComplexBall(mid, rad + 2 * _pad(abs(mid), prec), prec)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "ComplexBall":
        o = self._coerce(other)
        prec = min(self.prec, o.prec)
        with mp.workprec(_workprec(prec)):
            bm = abs(o.mid)
            denom_lo = bm - o.rad
            if denom_lo <= 0:
                raise PrecisionError("division by a ball containing zero")
            mid = self.mid / o.mid
            rad = (self.rad * bm + abs(self.mid) * o.rad) / (bm * denom_lo)
        return ComplexBall(mid, rad + 2 * _pad(abs(mid), prec), prec)

    def __rtruediv__(self, other) -> "ComplexBall":
        return self._coerce(other) / self

    def powi(self, e: int) -> "ComplexBall":
        """Integer power by binary squaring of balls."""
        if e < 0:
            return ComplexBall.exact_int(1, self.prec) / self.powi(-e)
        result = ComplexBall.exact_int(1, self.prec)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def modulus(self) -> RealBall:
        with mp.workprec(_workprec(self.prec)):
            m = abs(self.mid)
            lo = max(m - self.rad, mpf(0))
            hi = m + self.rad
        return RealBall.from_endpoints(lo, hi, self.prec)

    def real_ball(self) -> RealBall:
        """Enclosure of the real part (radius covers the whole disc)."""
        return RealBall(self.mid.real, self.rad, self.prec)

    def imag_ball(self) -> RealBall:
        return RealBall(self.mid.imag, self.rad, self.prec)

    def distance_lower(self, other: "ComplexBall"):
        """Certified lower bound on |z - w| for z, w in the two discs."""
        prec = min(self.prec, other.prec)
        with mp.workprec(_workprec(prec)):
            d = abs(self.mid - other.mid) - self.rad - other.rad
            return d - _pad(d, prec)


def ball_sum(balls, prec: int = DEFAULT_PREC):
    """Sum of a nonempty iterable of balls."""
    it = iter(balls)
    try:
        total = next(it)
    except StopIteration:
        return RealBall.exact_int(0, prec)
    for b in it:
        total = total + b
    return total
