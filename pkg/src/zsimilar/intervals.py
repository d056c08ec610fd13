"""Exact interval arithmetic with Fraction endpoints.

Every value here is an enclosure: the real number in question provably
lies between lo and hi. Square roots come from integer square roots,
logarithms from the atanh series with an explicit tail bound, exp from
the Taylor series after argument reduction by log 2, and pi from
Machin's formula. Precision arguments count binary digits and control
tightness only; containment never depends on them.
"""

from fractions import Fraction
from math import isqrt

from zsimilar.arith import nth_root_int

_ZERO = Fraction(0)
_ONE = Fraction(1)


def _as_frac(x):
    if isinstance(x, Fraction):
        return x
    return Fraction(x)


class Iv:
    """Closed interval [lo, hi] with rational endpoints."""

    __slots__ = ("lo", "hi")

    def __init__(self, lo, hi=None):
        if hi is None:
            hi = lo
        lo = _as_frac(lo)
        hi = _as_frac(hi)
        if lo > hi:
            raise ValueError("empty interval")
        self.lo = lo
        self.hi = hi

    def __repr__(self):
        return "Iv(%s, %s)" % (self.lo, self.hi)

    def __eq__(self, other):
        return isinstance(other, Iv) and self.lo == other.lo and self.hi == other.hi

    def __hash__(self):
        return hash((self.lo, self.hi))

    def __add__(self, other):
        other = as_iv(other)
        return Iv(self.lo + other.lo, self.hi + other.hi)

    __radd__ = __add__

    def __neg__(self):
        return Iv(-self.hi, -self.lo)

    def __sub__(self, other):
        other = as_iv(other)
        return Iv(self.lo - other.hi, self.hi - other.lo)

    def __rsub__(self, other):
        return as_iv(other) - self

    def __mul__(self, other):
        other = as_iv(other)
        ps = (
            self.lo * other.lo,
            self.lo * other.hi,
            self.hi * other.lo,
            self.hi * other.hi,
        )
        return Iv(min(ps), max(ps))

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = as_iv(other)
        if other.lo <= 0 <= other.hi:
            raise ZeroDivisionError("interval divisor straddles zero")
        return self * Iv(1 / other.hi, 1 / other.lo)

    def __rtruediv__(self, other):
        return as_iv(other) / self

    def sq(self):
        # tighter than self*self when the interval straddles zero
        if self.lo >= 0:
            return Iv(self.lo * self.lo, self.hi * self.hi)
        if self.hi <= 0:
            return Iv(self.hi * self.hi, self.lo * self.lo)
        return Iv(_ZERO, max(self.lo * self.lo, self.hi * self.hi))

    def __abs__(self):
        if self.lo >= 0:
            return self
        if self.hi <= 0:
            return -self
        return Iv(_ZERO, max(-self.lo, self.hi))

    def contains(self, x):
        return self.lo <= x <= self.hi

    def straddles_zero(self):
        return self.lo <= 0 <= self.hi

    def mid(self):
        return (self.lo + self.hi) / 2

    def width(self):
        return self.hi - self.lo

    def mag(self):
        """Largest absolute value over the interval."""
        return max(-self.lo, self.hi)

    def mig(self):
        """Smallest absolute value over the interval."""
        if self.straddles_zero():
            return _ZERO
        return min(abs(self.lo), abs(self.hi))

    def intersect(self, other):
        lo = max(self.lo, other.lo)
        hi = min(self.hi, other.hi)
        if lo > hi:
            return None
        return Iv(lo, hi)

    def hull(self, other):
        return Iv(min(self.lo, other.lo), max(self.hi, other.hi))

    def subset_of(self, other):
        return other.lo <= self.lo and self.hi <= other.hi

    def interior_of(self, other):
        return other.lo < self.lo and self.hi < other.hi

    def round_to(self, prec):
        """Outward rounding to denominators 2**prec; caps coefficient blowup."""
        m = 1 << prec
        lo = Fraction((self.lo * m).__floor__(), m)
        hi = Fraction(-((-self.hi * m).__floor__()), m)
        return Iv(lo, hi)


def as_iv(x):
    if isinstance(x, Iv):
        return x
    return Iv(_as_frac(x))


def sqrt_frac_down(q, prec):
    """Rational r with r <= sqrt(q) and sqrt(q) - r <= 2**-prec."""
    q = _as_frac(q)
    if q < 0:
        raise ValueError("negative radicand")
    m = 1 << prec
    n, d = q.numerator, q.denominator
    return Fraction(isqrt(n * d * m * m), d * m)


def sqrt_frac_up(q, prec):
    q = _as_frac(q)
    if q < 0:
        raise ValueError("negative radicand")
    m = 1 << prec
    n, d = q.numerator, q.denominator
    r = isqrt(n * d * m * m)
    if r * r == n * d * m * m:
        return Fraction(r, d * m)
    return Fraction(r + 1, d * m)


def iv_sqrt(x, prec):
    x = as_iv(x)
    return Iv(sqrt_frac_down(x.lo, prec), sqrt_frac_up(x.hi, prec))


def nthroot_frac_down(q, k, prec):
    """Rational r with r <= q**(1/k) and error at most 2**-prec."""
    q = _as_frac(q)
    if q < 0:
        raise ValueError("negative radicand")
    m = 1 << prec
    n, d = q.numerator, q.denominator
    return Fraction(nth_root_int(n * d ** (k - 1) * m**k, k), d * m)


def nthroot_frac_up(q, k, prec):
    q = _as_frac(q)
    if q < 0:
        raise ValueError("negative radicand")
    m = 1 << prec
    n, d = q.numerator, q.denominator
    scaled = n * d ** (k - 1) * m**k
    r = nth_root_int(scaled, k)
    if r**k == scaled:
        return Fraction(r, d * m)
    return Fraction(r + 1, d * m)


def iv_nthroot(x, k, prec):
    x = as_iv(x)
    return Iv(nthroot_frac_down(x.lo, k, prec), nthroot_frac_up(x.hi, k, prec))


def _atanh_enclosure(t, prec):
    """Enclosure of atanh(t) for rational |t| < 1 via the odd power series.

    Tail after the k-th kept term is bounded by |t|^(2k+3)/((2k+3)(1-t^2)).
    """
    t = _as_frac(t)
    if not -1 < t < 1:
        raise ValueError("atanh argument out of range")
    if t == 0:
        return Iv(_ZERO)
    eps = Fraction(1, 1 << (prec + 2))
    one_minus = 1 - t * t
    s = _ZERO
    tp = t
    k = 0
    while True:
        s += tp / (2 * k + 1)
        tp *= t * t
        bound = abs(tp) / ((2 * k + 3) * one_minus)
        if bound < eps:
            return Iv(s - bound, s + bound).round_to(prec + 2)
        k += 1


def _atan_enclosure(t, prec):
    """Enclosure of atan(t) for rational 0 < t <= 1; alternating series."""
    t = _as_frac(t)
    eps = Fraction(1, 1 << (prec + 2))
    s = _ZERO
    tp = t
    k = 0
    while True:
        s += tp / (2 * k + 1) if k % 2 == 0 else -tp / (2 * k + 1)
        tp *= t * t
        bound = tp / (2 * k + 3)
        if bound < eps:
            return Iv(s - bound, s + bound).round_to(prec + 2)
        k += 1


_cache = {}


def log2_iv(prec):
    key = ("log2", prec)
    if key not in _cache:
        _cache[key] = 2 * _atanh_enclosure(Fraction(1, 3), prec + 2)
    return _cache[key]


def pi_iv(prec):
    key = ("pi", prec)
    if key not in _cache:
        a = _atan_enclosure(Fraction(1, 5), prec + 6)
        b = _atan_enclosure(Fraction(1, 239), prec + 6)
        _cache[key] = (16 * a - 4 * b).round_to(prec + 2)
    return _cache[key]


def log_frac(q, prec):
    """Enclosure of log(q) for rational q > 0."""
    q = _as_frac(q)
    if q <= 0:
        raise ValueError("log of nonpositive value")
    e = 0
    m = q
    hi_cut = Fraction(4, 3)
    lo_cut = Fraction(2, 3)
    while m > hi_cut:
        m /= 2
        e += 1
    while m < lo_cut:
        m *= 2
        e -= 1
    t = (m - 1) / (m + 1)
    body = 2 * _atanh_enclosure(t, prec + 2)
    if e == 0:
        return body.round_to(prec + 1)
    scale = log2_iv(prec + 2 + e.bit_length())
    return (e * scale + body).round_to(prec + 1)


def iv_log(x, prec):
    x = as_iv(x)
    if x.lo <= 0:
        raise ValueError("log of interval touching zero")
    return Iv(log_frac(x.lo, prec).lo, log_frac(x.hi, prec).hi)


def _exp_series(z, prec):
    """Enclosure of exp(z) for rational |z| <= 1."""
    z = _as_frac(z)
    assert -1 <= z <= 1
    eps = Fraction(1, 1 << (prec + 2))
    s = _ONE
    term = _ONE
    k = 0
    while True:
        k += 1
        term = term * z / k
        s += term
        # tail <= |term| * (|z|/(k+1)) / (1 - |z|/(k+2)) <= 2*|term| once k >= 1
        bound = 2 * abs(term)
        if bound < eps:
            return Iv(s - bound, s + bound)


def exp_frac(q, prec):
    """Enclosure of exp(q) for rational q."""
    q = _as_frac(q)
    if q == 0:
        return Iv(_ONE)
    # shift by a multiple of log 2 so the series argument is small
    m = int(round(q.numerator * 1.4426950408889634 / q.denominator))
    while True:
        l2 = log2_iv(prec + 4 + abs(m).bit_length())
        r = Iv(q) - m * l2
        if -1 <= r.lo and r.hi <= 1:
            break
        m += 1 if r.hi > 1 else -1
    body = Iv(_exp_series(r.lo, prec + 2).lo, _exp_series(r.hi, prec + 2).hi)
    if m >= 0:
        out = body * Fraction(1 << m)
    else:
        out = body * Fraction(1, 1 << -m)
    return out.round_to(prec + 1)


def iv_exp(x, prec):
    x = as_iv(x)
    return Iv(exp_frac(x.lo, prec).lo, exp_frac(x.hi, prec).hi)


def iv_poly_eval(coeffs, x):
    """Horner evaluation of a rational polynomial (ascending) on an interval."""
    x = as_iv(x)
    acc = Iv(_ZERO)
    for c in reversed(coeffs):
        acc = acc * x + as_iv(c)
    return acc


class CIv:
    """Rectangular complex interval: re + i*im with Iv components."""

    __slots__ = ("re", "im")

    def __init__(self, re, im=None):
        self.re = as_iv(re)
        self.im = as_iv(im if im is not None else _ZERO)

    def __repr__(self):
        return "CIv(%r, %r)" % (self.re, self.im)

    def __add__(self, other):
        other = as_civ(other)
        return CIv(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __neg__(self):
        return CIv(-self.re, -self.im)

    def __sub__(self, other):
        other = as_civ(other)
        return CIv(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        return as_civ(other) - self

    def __mul__(self, other):
        other = as_civ(other)
        return CIv(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def abs2(self):
        return self.re.sq() + self.im.sq()

    def __truediv__(self, other):
        other = as_civ(other)
        d = other.abs2()
        if d.lo <= 0:
            raise ZeroDivisionError("complex interval divisor may contain zero")
        conj = CIv(other.re, -other.im)
        num = self * conj
        return CIv(num.re / d, num.im / d)

    def __rtruediv__(self, other):
        return as_civ(other) / self

    def contains_zero(self):
        return self.re.straddles_zero() and self.im.straddles_zero()

    def mid(self):
        return (self.re.mid(), self.im.mid())

    def width(self):
        return max(self.re.width(), self.im.width())

    def subset_of(self, other):
        return self.re.subset_of(other.re) and self.im.subset_of(other.im)

    def interior_of(self, other):
        return self.re.interior_of(other.re) and self.im.interior_of(other.im)

    def round_to(self, prec):
        return CIv(self.re.round_to(prec), self.im.round_to(prec))


def as_civ(z):
    if isinstance(z, CIv):
        return z
    if isinstance(z, Iv):
        return CIv(z)
    return CIv(as_iv(z))


def civ_poly_eval(coeffs, z):
    """Horner evaluation with complex-interval argument; rational coeffs."""
    z = as_civ(z)
    acc = CIv(_ZERO)
    for c in reversed(coeffs):
        acc = acc * z + as_civ(c)
    return acc
