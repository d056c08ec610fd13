"""Number fields at desk scale.

A field is presented by a monic irreducible integer polynomial. The ring
of integers comes from the Round-2 / Pohst-Zassenhaus loop: at every
prime whose square divides disc(f), enlarge the current order by the
multiplier ring of its p-radical until stable. The exact index chain is
kept, so disc(f) = index^2 * disc(K) is an identity checked at
construction, not an article of faith.

Elements carry exact rational coordinates over the power basis; the
integral basis, its multiplication table and the signature live on the
field object. Factoring disc(f) for large inputs can exceed any sensible
budget, so construction accepts a partial-factorization limit: the order
is then maximal at every known prime and `maximal_certified` records
whether the unfactored cofactor could still hide a square. Paths that
need genuine maximality for a negative decision must consult the flag;
positive paths all end in integer identities and stay sound either way.
"""

from fractions import Fraction
from functools import reduce
from math import gcd, isqrt

from zsimilar import polys
from zsimilar.arith import factorint
from zsimilar.fqalgebra import FpAlgebra
from zsimilar.intlinalg import (
    det_frac,
    hnf_lattice,
    identity_mat,
    inv_frac,
    lattice_contains,
    left_kernel_int,
    snf_with_transform,
    solve_frac_right,
    solve_int_left,
    transpose,
)


class BoundsExceeded(Exception):
    """Raised when a certified answer would need work past the configured
    desk-scale limits (field degree, discriminant, factoring budget)."""


def _pxgcd_q(a, b):
    """Extended gcd of rational coefficient polynomials; gcd is monic."""
    r0, r1 = [Fraction(c) for c in a], [Fraction(c) for c in b]
    s0, s1 = [Fraction(1)], []
    t0, t1 = [], [Fraction(1)]
    while polys.trim(r1):
        q, r = polys.pdivmod_frac(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, polys.psub(s0, polys.pmul(q, s1))
        t0, t1 = t1, polys.psub(t0, polys.pmul(q, t1))
    r0 = polys.trim(r0)
    if not r0:
        raise ValueError("gcd of zero polynomials")
    lc = r0[-1]
    inv = 1 / lc
    return (
        [c * inv for c in r0],
        [c * inv for c in s0],
        [c * inv for c in t0],
    )


def sturm_chain(f):
    chain = [[Fraction(c) for c in polys.trim(f)]]
    d = polys.derivative(chain[0])
    if polys.trim(d):
        chain.append(d)
        while True:
            _, r = polys.pdivmod_frac(chain[-2], chain[-1])
            r = polys.trim(r)
            if not r:
                break
            chain.append(polys.pneg(r))
    return chain


def _sign_changes(chain, x):
    signs = []
    for g in chain:
        v = polys.peval(g, x)
        if v:
            signs.append(1 if v > 0 else -1)
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def count_real_roots(chain, a, b):
    """Number of distinct real roots in (a, b]."""
    return _sign_changes(chain, a) - _sign_changes(chain, b)


def cauchy_bound(f):
    f = polys.trim(f)
    lc = abs(Fraction(f[-1]))
    return 1 + max(abs(Fraction(c)) / lc for c in f[:-1]) if len(f) > 1 else Fraction(1)


def isolate_real_roots(f):
    """Disjoint rational intervals (a, b], one simple root each, sorted.

    Requires a squarefree polynomial with no rational roots of degree
    >= 2 (irreducible inputs qualify); degree-1 input is special-cased.
    """
    f = polys.trim(f)
    if polys.deg(f) == 1:
        r = -Fraction(f[0], f[1])
        return [(r - 1, r)]
    chain = sturm_chain(f)
    B = cauchy_bound(f)
    total = count_real_roots(chain, -B, B)
    out = []
    stack = [(-B, B, total)]
    while stack:
        a, b, k = stack.pop()
        if k == 0:
            continue
        if k == 1:
            out.append((a, b))
            continue
        m = (a + b) / 2
        assert polys.peval(f, m) != 0, "irreducible input cannot have rational roots"
        kl = count_real_roots(chain, a, m)
        stack.append((a, m, kl))
        stack.append((m, b, k - kl))
    out.sort()
    return out


def refine_root(f, a, b, prec):
    """Shrink an isolating interval by bisection to width <= 2**-prec."""
    f = [Fraction(c) for c in polys.trim(f)]
    fa = polys.peval(f, a)
    fb = polys.peval(f, b)
    if fb == 0:
        return (b, b)
    assert fa != 0 and (fa > 0) != (fb > 0)
    width = Fraction(1, 1 << prec)
    while b - a > width:
        m = (a + b) / 2
        fm = polys.peval(f, m)
        if fm == 0:
            return (m, m)
        if (fm > 0) == (fa > 0):
            a, fa = m, fm
        else:
            b = m
    return (a, b)


def _pmul_mod(a, b, f):
    prod = polys.pmul(a, b)
    _, r = polys.pdivmod_frac(prod, f)
    return r


def _pad(v, n):
    v = list(v)
    return v + [Fraction(0)] * (n - len(v))


class NfElt:
    """Field element as exact power-basis coordinates."""

    __slots__ = ("K", "co")

    def __init__(self, K, co):
        self.K = K
        self.co = tuple(Fraction(c) for c in _pad(co, K.n))

    def __repr__(self):
        return "NfElt(%s)" % (list(self.co),)

    def __eq__(self, other):
        return (
            isinstance(other, NfElt) and self.K is other.K and self.co == other.co
        )

    def __hash__(self):
        return hash(self.co)

    def __add__(self, other):
        other = self.K.coerce(other)
        return NfElt(self.K, [a + b for a, b in zip(self.co, other.co)])

    __radd__ = __add__

    def __neg__(self):
        return NfElt(self.K, [-a for a in self.co])

    def __sub__(self, other):
        return self + (-self.K.coerce(other))

    def __rsub__(self, other):
        return self.K.coerce(other) - self

    def __mul__(self, other):
        other = self.K.coerce(other)
        return NfElt(self.K, _pmul_mod(list(self.co), list(other.co), self.K.fq))

    __rmul__ = __mul__

    def __truediv__(self, other):
        return self * self.K.coerce(other).inverse()

    def __rtruediv__(self, other):
        return self.K.coerce(other) * self.inverse()

    def __pow__(self, e):
        if e < 0:
            return self.inverse() ** (-e)
        out = self.K.one()
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def is_zero(self):
        return not any(self.co)

    def inverse(self):
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero field element")
        g, u, _ = _pxgcd_q(list(self.co), self.K.fq)
        assert polys.deg(g) == 0
        _, r = polys.pdivmod_frac(u, self.K.fq)
        return NfElt(self.K, [c / g[0] for c in _pad(r, self.K.n)])

    def mul_matrix_power(self):
        """Matrix of multiplication by self over the power basis (rows =
        images of theta^i)."""
        K = self.K
        rows = []
        cur = list(self.co)
        for _ in range(K.n):
            rows.append(_pad(cur, K.n))
            cur = _pmul_mod(cur, [0, 1], K.fq)
        return rows

    def norm(self):
        return det_frac(self.mul_matrix_power())

    def trace(self):
        M = self.mul_matrix_power()
        return sum(M[i][i] for i in range(self.K.n))

    def minpoly(self):
        """Monic minimal polynomial over Q, ascending coefficients."""
        K = self.K
        powers = [K.one().co]
        cur = K.one()
        for k in range(1, K.n + 1):
            cur = cur * self
            A = transpose([list(p) for p in powers])
            sol = solve_frac_right(A, list(cur.co))
            if sol is not None:
                return [-c for c in sol] + [Fraction(1)]
            powers.append(cur.co)
        raise AssertionError("element of degree larger than the field")

    def to_ibasis(self):
        """Exact coordinates over the integral basis."""
        K = self.K
        return [
            sum(self.co[j] * K.binv[j][i] for j in range(K.n)) for i in range(K.n)
        ]

    def is_integral(self):
        return all(c.denominator == 1 for c in self.to_ibasis())


def _basis_with_first(rows, v):
    """Basis of the row lattice whose first vector is the primitive lattice
    element v; the remaining rows complete it."""
    H = hnf_lattice([list(r) for r in rows])
    sol = solve_int_left(H, list(v))
    assert sol is not None, "v not in the lattice"
    assert reduce(gcd, sol) == 1, "v not primitive in the lattice"
    _, _, V = snf_with_transform([list(sol)])
    Vinv = inv_frac(V)
    assert all(x.denominator == 1 for row in Vinv for x in row)
    T = [[int(x) for x in row] for row in Vinv]
    first = [sum(T[0][k] * H[k][j] for k in range(len(H))) for j in range(len(v))]
    if first != list(v):
        T[0] = [-c for c in T[0]]
    out = [
        [sum(T[i][k] * H[k][j] for k in range(len(H))) for j in range(len(v))]
        for i in range(len(H))
    ]
    assert out[0] == list(v)
    return out


class NumberField:
    """Ring of integers, discriminant and signature for Q[x]/(f)."""

    def __init__(self, f, den, wrows, disc_f, index, maximal_certified, cofactor):
        self.f = [int(c) for c in f]
        self.fq = [Fraction(c) for c in self.f]
        self.n = polys.deg(self.f)
        self.den = den
        self.wrows = wrows  # n x n integers; basis vectors are rows/den
        self.disc_f = disc_f
        self.index = index
        self.disc = disc_f // (index * index)
        self.maximal_certified = maximal_certified
        self.disc_cofactor = cofactor
        basis = [[Fraction(x, den) for x in row] for row in wrows]
        self.basis = basis
        self.binv = inv_frac(basis)
        self.mt = self._mult_table()
        chain = sturm_chain(self.f)
        B = cauchy_bound(self.f)
        self.r1 = count_real_roots(chain, -B, B)
        self.r2 = (self.n - self.r1) // 2
        self._cache = {}

    def _mult_table(self):
        mt = []
        for i in range(self.n):
            row = []
            for j in range(self.n):
                prod = _pmul_mod(self.basis[i], self.basis[j], self.fq)
                co = _pad(prod, self.n)
                ib = [
                    sum(co[t] * self.binv[t][s] for t in range(self.n))
                    for s in range(self.n)
                ]
                assert all(c.denominator == 1 for c in ib), "integral basis not closed"
                row.append([int(c) for c in ib])
            mt.append(row)
        return mt

    # -- element constructors -------------------------------------------

    def coerce(self, x):
        if isinstance(x, NfElt):
            assert x.K is self
            return x
        if isinstance(x, (int, Fraction)):
            return NfElt(self, [x])
        return NfElt(self, list(x))

    def elt(self, power_coords):
        return NfElt(self, list(power_coords))

    def from_ibasis(self, vec):
        co = [
            sum(Fraction(vec[i]) * self.basis[i][j] for i in range(self.n))
            for j in range(self.n)
        ]
        return NfElt(self, co)

    def gen(self):
        return NfElt(self, [0, 1])

    def one(self):
        return NfElt(self, [1])

    def zero(self):
        return NfElt(self, [])

    def __repr__(self):
        return "NumberField(%s)" % (self.f,)

    def ibasis_elements(self):
        return [NfElt(self, row) for row in self.basis]

    def mul_matrix_ibasis(self, x):
        """Integer matrix of multiplication by integral x over the integral
        basis; raises if x is not integral."""
        xi = self.coerce(x).to_ibasis()
        assert all(c.denominator == 1 for c in xi)
        xi = [int(c) for c in xi]
        out = []
        for i in range(self.n):
            row = [0] * self.n
            for j in range(self.n):
                cj = xi[j]
                if cj:
                    tj = self.mt[i][j]
                    for s in range(self.n):
                        row[s] += cj * tj[s]
            out.append(row)
        return out


def _p_radical_lattice(p, basis, binv, fq, n):
    """HNF rows (integral-basis coords) of the p-radical lattice of the
    order with the given basis: radical lift of O/pO plus p*O."""
    table = []
    for i in range(n):
        row = []
        for j in range(n):
            prod = _pmul_mod(basis[i], basis[j], fq)
            co = _pad(prod, n)
            ib = [sum(co[t] * binv[t][s] for t in range(n)) for s in range(n)]
            assert all(c.denominator == 1 for c in ib)
            row.append([int(c) % p for c in ib])
        table.append(row)
    one_pow = _pad([Fraction(1)], n)
    one_ib = [sum(one_pow[t] * binv[t][s] for t in range(n)) for s in range(n)]
    assert all(c.denominator == 1 for c in one_ib)
    A = FpAlgebra(p, table, [int(c) % p for c in one_ib])
    rad = A.radical()
    rows = [[int(c) for c in v] for v in rad]
    rows += [[p if i == j else 0 for j in range(n)] for i in range(n)]
    return hnf_lattice(rows)


def _multiplier_ring(p, den, wrows, fq, n):
    """One Round-2 step: the multiplier ring of the p-radical of the order
    spanned by wrows/den. Returns (den2, wrows2), HNF-normalized."""
    basis = [[Fraction(x, den) for x in row] for row in wrows]
    binv = inv_frac(basis)
    MI = _p_radical_lattice(p, basis, binv, fq, n)
    D = 1
    for i in range(n):
        D *= MI[i][i]
    inv_mi = inv_frac(MI)
    assert all((x * D).denominator == 1 for row in inv_mi for x in row)
    adj = [[int(x * D) for x in row] for row in inv_mi]
    # mult-by-generator matrices over the order basis
    mt = []
    for i in range(n):
        row = []
        for j in range(n):
            prod = _pmul_mod(basis[i], basis[j], fq)
            co = _pad(prod, n)
            ib = [sum(co[t] * binv[t][s] for t in range(n)) for s in range(n)]
            row.append([int(c) for c in ib])
        mt.append(row)
    blocks = []
    for k in range(n):
        g = MI[k]
        mulg = []
        for i in range(n):
            acc = [0] * n
            for j in range(n):
                cj = g[j]
                if cj:
                    tj = mt[i][j]
                    for s in range(n):
                        acc[s] += cj * tj[s]
            mulg.append(acc)
        block = [
            [sum(mulg[i][t] * adj[t][s] for t in range(n)) for s in range(n)]
            for i in range(n)
        ]
        blocks.append(block)
    m = p * D
    ncols = n * n
    stacked = []
    for i in range(n):
        stacked.append([blocks[k][i][s] for k in range(n) for s in range(n)])
    for i in range(ncols):
        row = [0] * ncols
        row[i] = m
        stacked.append(row)
    ker = left_kernel_int(stacked)
    cs = [row[:n] for row in ker]
    C = hnf_lattice(cs)
    assert len(C) == n
    rows2 = [
        [sum(C[i][k] * wrows[k][j] for k in range(n)) for j in range(n)]
        for i in range(n)
    ]
    den2 = den * p
    g = den2
    for row in rows2:
        for x in row:
            g = gcd(g, x)
    den2 //= g
    rows2 = [[x // g for x in row] for row in rows2]
    return den2, hnf_lattice(rows2)


def ring_of_integers(f, factor_limit=None):
    """NumberField with a maximal (or maximal-at-known-primes) order.

    factor_limit, when set, caps the effort spent factoring disc(f); the
    unfactored cofactor is recorded and maximal_certified turns False if
    it is nontrivial.
    """
    f = polys.trim([int(c) for c in f])
    n = polys.deg(f)
    if n < 1 or f[-1] != 1:
        raise ValueError("defining polynomial must be monic of degree >= 1")
    if n == 1:
        return NumberField(f, 1, [[1]], 1, 1, True, 1)
    _, fac = polys.factor_poly_q(f)
    if len(fac) != 1 or fac[0][1] != 1 or polys.deg(fac[0][0]) != n:
        raise ValueError("defining polynomial must be irreducible")
    disc_f = polys.discriminant(f)
    assert disc_f != 0
    if factor_limit is None:
        primes = factorint(disc_f)
        cof = 1
    else:
        primes, cof = factorint(disc_f, partial_limit=factor_limit)
        for p in list(primes):
            while cof % p == 0:
                cof //= p
                primes[p] += 1
    fq = [Fraction(c) for c in f]
    den, rows = 1, identity_mat(n)
    for p in sorted(primes):
        if primes[p] < 2:
            continue
        while True:
            den2, rows2 = _multiplier_ring(p, den, rows, fq, n)
            if den2 == den and rows2 == rows:
                break
            den, rows = den2, rows2
    one_scaled = [den] + [0] * (n - 1)
    assert lattice_contains(rows, one_scaled)
    rows = _basis_with_first(rows, one_scaled)
    dd = det_frac([[Fraction(x, den) for x in row] for row in rows])
    index_sq = 1 / (dd * dd)
    assert index_sq.denominator == 1
    index = isqrt(int(index_sq))
    assert index * index == int(index_sq)
    assert disc_f % (index * index) == 0
    return NumberField(f, den, rows, disc_f, index, cof == 1, cof)
