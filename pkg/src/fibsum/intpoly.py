"""Exact integer-coefficient polynomial arithmetic.

Covers everything the pipeline needs from commutative algebra: Sylvester
resultants by fraction-free (Bareiss) elimination, the norm of
(k+1)*r - 2k over the k-step characteristic polynomial (closed form and
determinant recursion), p-adic valuations, mod-25 residue scans, and
minimal polynomials of rational expressions in an algebraic number via
bivariate resultant elimination.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .balls import ComplexBall, RealBall


@dataclass(frozen=True)
class IntPolynomial:
    """Dense integer polynomial, coefficients in ascending degree order."""

    coeffs: tuple[int, ...]

    def __init__(self, coeffs: Sequence[int]):
        cs = [int(c) for c in coeffs]
        while len(cs) > 1 and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def leading(self) -> int:
        return self.coeffs[-1]

    def is_zero(self) -> bool:
        return self.coeffs == (0,)

    def __call__(self, x):
        """Horner evaluation; works for int, Fraction, and ball arguments."""
        acc = None
        for c in reversed(self.coeffs):
            acc = c if acc is None else acc * x + c
        return acc

    def eval_ball(self, x):
        """Horner evaluation with exact coefficients promoted to balls."""
        mk = ComplexBall.exact_int if isinstance(x, ComplexBall) else RealBall.exact_int
        acc = mk(self.coeffs[-1], x.prec)
        for c in reversed(self.coeffs[:-1]):
            acc = acc * x + mk(c, x.prec)
        return acc

    def derivative(self) -> "IntPolynomial":
        if self.degree == 0:
            return IntPolynomial([0])
        return IntPolynomial([i * c for i, c in enumerate(self.coeffs)][1:])

    def content(self) -> int:
        g = 0
        for c in self.coeffs:
            g = math.gcd(g, c)
        return g if g else 1

    def primitive(self) -> "IntPolynomial":
        """Content stripped, leading coefficient made positive."""
        g = self.content()
        if self.leading < 0:
            g = -g
        return IntPolynomial([c // g for c in self.coeffs])

    def __mul__(self, other: "IntPolynomial") -> "IntPolynomial":
        out = [0] * (self.degree + other.degree + 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return IntPolynomial(out)

    def to_json(self) -> list[str]:
        return [str(c) for c in self.coeffs]

    @classmethod
    def from_json(cls, data: Sequence[str]) -> "IntPolynomial":
        return cls([int(s) for s in data])

    def __str__(self) -> str:
        parts = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if c == 0 and self.degree > 0:
                continue
            term = f"{c}" if i == 0 else (f"{c}*T" if i == 1 else f"{c}*T^{i}")
            parts.append(term)
        return " + ".join(parts).replace("+ -", "- ")


def char_poly(k: int) -> IntPolynomial:
    """T^k - T^(k-1) - ... - T - 1, the k-step recurrence polynomial."""
    if k < 2:
        raise ValueError(f"order must be >= 2, got {k}")
    return IntPolynomial([-1] * k + [1])


# ---------------------------------------------------------------------------
# Fraction-free determinants and resultants


def _bareiss_det(rows, *, is_zero, exact_div, one):
    """Determinant by Bareiss elimination; entries form an integral domain."""
    m = [list(r) for r in rows]
    n = len(m)
    if n == 0:
        return one
    sign = 1
    prev = one
    for col in range(n - 1):
        if is_zero(m[col][col]):
            for r in range(col + 1, n):
                if not is_zero(m[r][col]):
                    m[col], m[r] = m[r], m[col]
                    sign = -sign
                    break
            else:
                return m[0][0] - m[0][0]  # zero of the domain
        piv = m[col][col]
        for r in range(col + 1, n):
            for c in range(col + 1, n):
                m[r][c] = exact_div(m[r][c] * piv - m[r][col] * m[col][c], prev)
            m[r][col] = m[r][col] - m[r][col]
        prev = piv
    det = m[n - 1][n - 1]
    return det if sign == 1 else -det


def _sylvester_rows(f: Sequence, g: Sequence, zero):
    """Sylvester matrix rows for polynomials given ascending, any coeff ring."""
    df, dg = len(f) - 1, len(g) - 1
    n = df + dg
    rows = []
    fdesc = list(reversed(f))
    gdesc = list(reversed(g))
    for i in range(dg):
        rows.append([zero] * i + fdesc + [zero] * (n - df - 1 - i))
    for i in range(df):
        rows.append([zero] * i + gdesc + [zero] * (n - dg - 1 - i))
    return rows


def _int_exact_div(a: int, b: int) -> int:
    q, r = divmod(a, b)
    if r:
        raise ArithmeticError("inexact division in Bareiss elimination")
    return q


def resultant(f: IntPolynomial, g: IntPolynomial) -> int:
    """Exact resultant via Bareiss elimination on the Sylvester matrix.

    Convention: Res(f, g) = lc(f)^deg(g) * prod g(alpha_i) over the roots
    of f, so for monic f it is the field norm of g evaluated at a root.
    """
    if f.is_zero() or g.is_zero():
        raise ValueError("resultant requires nonzero polynomials")
    if f.degree == 0 and g.degree == 0:
        return 1
    if g.degree == 0:
        return g.coeffs[0] ** f.degree
    if f.degree == 0:
        return f.coeffs[0] ** g.degree
    rows = _sylvester_rows(f.coeffs, g.coeffs, 0)
    return _bareiss_det(rows, is_zero=lambda x: x == 0, exact_div=_int_exact_div, one=1)


# ---------------------------------------------------------------------------
# Norm of (k+1)*r - 2k over the k-step field, three independent routes


def norm_linear_resultant(k: int) -> int:
    """Norm of (k+1)*r - 2k as Res(f_k, (k+1)T - 2k): the ground truth."""
    return resultant(char_poly(k), IntPolynomial([-2 * k, k + 1]))


def delta_closed_form(k: int) -> int:
    """(2k)^(k-1)(k-1) - sum_{j=0}^{k-2} (k+1)^(k-j) (2k)^j, exactly.

    The geometric-series division by k-1 is avoided by keeping the sum
    expanded, so every intermediate is an integer.
    """
    if k < 2:
        raise ValueError(f"order must be >= 2, got {k}")
    s = sum((k + 1) ** (k - j) * (2 * k) ** j for j in range(k - 1))
    return (2 * k) ** (k - 1) * (k - 1) - s


def delta_recursion(k: int) -> int:
    """delta_k from delta_i = (-1)^(i+1) (k+1)^i - 2k delta_(i-1), delta_0 = 1.

    Equals the norm of (k+1)*r - 2k, i.e. (-1)^k * delta_closed_form(k).
    """
    if k < 2:
        raise ValueError(f"order must be >= 2, got {k}")
    delta = 1
    for i in range(1, k + 1):
        delta = (-1) ** (i + 1) * (k + 1) ** i - 2 * k * delta
    return delta


# ---------------------------------------------------------------------------
# Valuations and residue scans


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


def padic_val(p: int, x: int) -> int:
    """Largest e with p^e dividing x (x nonzero, p prime)."""
    if not _is_prime(p):
        raise ValueError(f"{p} is not prime")
    if x == 0:
        raise ValueError("valuation of zero is infinite")
    e = 0
    x = abs(x)
    while x % p == 0:
        x //= p
        e += 1
    return e


def mod25_scan(k_lo: int, k_hi: int) -> list[tuple[int, int]]:
    """Residues delta_closed_form(k) mod 25 for k_lo <= k <= k_hi."""
    if not (2 <= k_lo <= k_hi):
        raise ValueError("need 2 <= k_lo <= k_hi")
    return [(k, delta_closed_form(k) % 25) for k in range(k_lo, k_hi + 1)]


def mod25_flagged(scan: list[tuple[int, int]]) -> list[int]:
    """Orders with residue 0 mod 25 outside the k = 1 (mod 5) family."""
    return [k for k, r in scan if r == 0 and k % 5 != 1]


def periodicity_check(k: int) -> bool:
    """Whether delta(k)(k-1) and delta(k+100)(k+99) agree mod 25, exactly."""
    lhs = delta_closed_form(k) * (k - 1)
    rhs = delta_closed_form(k + 100) * (k + 99)
    return (lhs - rhs) % 25 == 0


# ---------------------------------------------------------------------------
# Minimal polynomial of num(r)/den(r) for r a root of f


class _YPoly:
    """Polynomial in an auxiliary variable with integer coefficients.

    Matrix-entry ring for the bivariate resultant; exact division (needed
    by Bareiss) is done over the rationals and checked for integrality.
    """

    __slots__ = ("cs",)

    def __init__(self, cs: Sequence[int]):
        cs = [int(c) for c in cs]
        while len(cs) > 1 and cs[-1] == 0:
            cs.pop()
        self.cs = cs

    def is_zero(self) -> bool:
        return self.cs == [0]

    def __add__(self, o: "_YPoly") -> "_YPoly":
        n = max(len(self.cs), len(o.cs))
        a = self.cs + [0] * (n - len(self.cs))
        b = o.cs + [0] * (n - len(o.cs))
        return _YPoly([x + y for x, y in zip(a, b)])

    def __sub__(self, o: "_YPoly") -> "_YPoly":
        return self + _YPoly([-c for c in o.cs])

    def __neg__(self) -> "_YPoly":
        return _YPoly([-c for c in self.cs])

    def __mul__(self, o: "_YPoly") -> "_YPoly":
        out = [0] * (len(self.cs) + len(o.cs) - 1)
        for i, a in enumerate(self.cs):
            if a:
                for j, b in enumerate(o.cs):
                    out[i + j] += a * b
        return _YPoly(out)


def _ypoly_exact_div(a: _YPoly, b: _YPoly) -> _YPoly:
    """Exact polynomial division a / b, error if not exact over the integers."""
    if b.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    rem = [Fraction(c) for c in a.cs]
    div = [Fraction(c) for c in b.cs]
    dq = len(rem) - len(div)
    if dq < 0:
        if all(c == 0 for c in rem):
            return _YPoly([0])
        raise ArithmeticError("inexact polynomial division")
    quot = [Fraction(0)] * (dq + 1)
    for i in range(dq, -1, -1):
        q = rem[i + len(div) - 1] / div[-1]
        quot[i] = q
        for j, d in enumerate(div):
            rem[i + j] -= q * d
    if any(c != 0 for c in rem):
        raise ArithmeticError("inexact polynomial division")
    out = []
    for c in quot:
        if c.denominator != 1:
            raise ArithmeticError("non-integer quotient in Bareiss elimination")
        out.append(c.numerator)
    return _YPoly(out)


def eliminate_quotient(f: IntPolynomial, num: IntPolynomial, den: IntPolynomial) -> IntPolynomial:
    """Res_x(f(x), den(x)*y - num(x)) as a primitive polynomial in y.

    Its roots include num(r)/den(r) for every root r of f with den(r) != 0.
    """
    if f.is_zero() or (num.is_zero() and den.is_zero()):
        raise ValueError("nonzero polynomials required")
    # h(x, y) = den(x)*y - num(x), collected by powers of x.
    dx = max(den.degree, num.degree)
    h = []
    for i in range(dx + 1):
        d = den.coeffs[i] if i <= den.degree else 0
        m = num.coeffs[i] if i <= num.degree else 0
        h.append(_YPoly([-m, d]))
    while len(h) > 1 and h[-1].is_zero():
        h.pop()
    fy = [_YPoly([c]) for c in f.coeffs]
    rows = _sylvester_rows(fy, h, _YPoly([0]))
    det = _bareiss_det(
        rows, is_zero=lambda p: p.is_zero(), exact_div=_ypoly_exact_div, one=_YPoly([1])
    )
    res = IntPolynomial(det.cs)
    if res.is_zero():
        raise ValueError("vanishing resultant: quotient is degenerate for f")
    return res.primitive()


class IrreducibilityInconclusive(ArithmeticError):
    """No prime in the ladder certified irreducibility; carries the candidate."""

    def __init__(self, candidate: IntPolynomial):
        super().__init__(f"irreducibility not established for {candidate}")
        self.candidate = candidate


def _first_primes(count: int) -> list[int]:
    out, p = [], 2
    while len(out) < count:
        if _is_prime(p):
            out.append(p)
        p += 1
    return out


def _polymod(a: list[int], f: list[int], p: int) -> list[int]:
    """a mod (f, p); f monic mod p, coefficients ascending."""
    a = [c % p for c in a]
    df = len(f) - 1
    for i in range(len(a) - 1, df - 1, -1):
        c = a[i]
        if c:
            for j in range(df + 1):
                a[i - df + j] = (a[i - df + j] - c * f[j]) % p
    a = a[:df]
    return a if a else [0]


def _polymulmod(a: list[int], b: list[int], f: list[int], p: int) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return _polymod(out, f, p)


def _polypow_xq(e: int, f: list[int], p: int) -> list[int]:
    """x^(p^e) mod (f, p) by repeated Frobenius (p-th powering)."""
    cur = _polymod([0, 1], f, p)
    for _ in range(e):
        acc = [1]
        base = cur
        n = p
        while n:
            if n & 1:
                acc = _polymulmod(acc, base, f, p)
            base = _polymulmod(base, base, f, p)
            n >>= 1
        cur = acc
    return cur


def _poly_trim(a: list[int]) -> list[int]:
    while len(a) > 1 and a[-1] == 0:
        a.pop()
    return a


def _polyrem_modp(a: list[int], b: list[int], p: int) -> list[int]:
    """Remainder of a modulo b over F_p (b nonzero, trimmed)."""
    a = _poly_trim([c % p for c in a])
    inv = pow(b[-1], -1, p)
    while len(a) >= len(b) and a != [0]:
        c = (a[-1] * inv) % p
        shift = len(a) - len(b)
        for j, d in enumerate(b):
            a[shift + j] = (a[shift + j] - c * d) % p
        a.pop()  # leading term cancelled exactly
        _poly_trim(a)
    return a if a else [0]


def _polygcd_modp(a: list[int], b: list[int], p: int) -> list[int]:
    a = _poly_trim([c % p for c in a])
    b = _poly_trim([c % p for c in b])
    while b != [0]:
        a, b = b, _polyrem_modp(a, b, p)
    return a


def is_irreducible_mod_p(g: IntPolynomial, p: int) -> bool:
    """Distinct-degree irreducibility test for g modulo the prime p."""
    n = g.degree
    if n < 1 or g.leading % p == 0:
        return False
    inv = pow(g.leading % p, -1, p)
    f = [(c * inv) % p for c in g.coeffs]
    if n == 1:
        return True
    # x^(p^n) == x mod (f, p)
    xn = _polypow_xq(n, f, p)
    xid = _polymod([0, 1], f, p)
    ln = max(len(xn), len(xid))
    if (xn + [0] * (ln - len(xn))) != (xid + [0] * (ln - len(xid))):
        return False
    # gcd(x^(p^(n/q)) - x, f) == 1 for every prime q | n
    q_primes = set()
    m, q = n, 2
    while q * q <= m:
        while m % q == 0:
            q_primes.add(q)
            m //= q
        q += 1
    if m > 1:
        q_primes.add(m)
    for q in sorted(q_primes):
        xe = _polypow_xq(n // q, f, p)
        width = max(len(xe), len(xid))
        xe = xe + [0] * (width - len(xe))
        xi = xid + [0] * (width - len(xid))
        diff = [(a - b) % p for a, b in zip(xe, xi)]
        g_ = _polygcd_modp(diff, f, p)
        if g_ != [g_[0]] or g_[0] == 0:
            return False
    return True


IRREDUCIBILITY_PRIME_LADDER = _first_primes(25)


def certify_irreducible(g: IntPolynomial) -> int:
    """Return a prime modulo which g stays irreducible, or raise."""
    for p in IRREDUCIBILITY_PRIME_LADDER:
        if is_irreducible_mod_p(g, p):
            return p
    raise IrreducibilityInconclusive(g)


def minpoly_of_quotient(
    f: IntPolynomial,
    num: IntPolynomial,
    den: IntPolynomial,
    root_selector: ComplexBall,
) -> IntPolynomial:
    """Primitive minimal polynomial of num(r)/den(r), r the selected root of f.

    The candidate comes from resultant elimination; it is checked to
    vanish on the supplied enclosure of the quotient's value, and its
    irreducibility is certified modulo a prime from a fixed ladder.
    """
    candidate = eliminate_quotient(f, num, den)
    value = candidate.eval_ball(root_selector)
    if not (value.real_ball().contains(0) and value.imag_ball().contains(0)):
        raise ValueError("selected value is certifiably not a root of the candidate")
    certify_irreducible(candidate)
    return candidate
