"""Ideals of the ring of integers of a number field.

An integral ideal is stored by the HNF basis of its coordinate lattice
over the integral basis; that matrix is the source of truth, and every
derived object (two-element form, anti-uniformizer, valuations) is
recomputed from it and checked at use. Prime decomposition factors the
defining polynomial mod p away from the index and splits the finite
algebra O/pO at the finitely many index primes. Randomized searches
(two-element forms, uniformizer sampling in weak approximation) draw
from a caller-seeded generator and retry until an exact check passes.
"""

import math
import random
from fractions import Fraction
from math import gcd

from zsimilar import arith, intlinalg, polys
from zsimilar.fqalgebra import FpAlgebra, wedderburn
from zsimilar.numfield import BoundsExceeded


def _lcm(a, b):
    return a // gcd(a, b) * b


class NfIdeal:
    """Nonzero integral ideal given by HNF rows over the integral basis."""

    __slots__ = ("K", "H")

    def __init__(self, K, rows, already_hnf=False):
        if already_hnf:
            H = rows
        else:
            H = intlinalg.hnf_lattice([list(r) for r in rows])
        assert len(H) == K.n, "ideal lattice must have full rank"
        self.K = K
        self.H = H

    def __repr__(self):
        return "NfIdeal(norm=%d)" % self.norm()

    def __eq__(self, other):
        return isinstance(other, NfIdeal) and self.K is other.K and self.H == other.H

    def __hash__(self):
        return hash(tuple(map(tuple, self.H)))

    def key(self):
        return tuple(x for row in self.H for x in row)

    def norm(self):
        n = 1
        for i in range(self.K.n):
            n *= self.H[i][i]
        return n

    def minimum(self):
        """Smallest positive rational integer in the ideal."""
        inv = intlinalg.inv_frac(self.H)
        m = 1
        for x in inv[0]:
            m = _lcm(m, Fraction(x).denominator)
        return m

    def contains_coords(self, v):
        return intlinalg.lattice_contains(self.H, list(v))

    def contains(self, x):
        co = self.K.coerce(x).to_ibasis()
        if any(c.denominator != 1 for c in co):
            return False
        return self.contains_coords([int(c) for c in co])

    def generators(self):
        """Rows as field elements; they generate even as a Z-module."""
        return [self.K.from_ibasis(row) for row in self.H]

    def is_module(self):
        """Exact check that the lattice is stable under the whole order."""
        for row in self.H:
            x = self.K.from_ibasis(row)
            for w in self.K.ibasis_elements():
                if not self.contains(w * x):
                    return False
        return True

    def __add__(self, other):
        assert self.K is other.K
        return NfIdeal(self.K, list(self.H) + list(other.H))

    def __mul__(self, other):
        assert self.K is other.K
        K = self.K
        rows = []
        for a in self.H:
            Ma = K.mul_matrix_ibasis(K.from_ibasis(a))
            for b in other.H:
                rows.append(
                    [sum(b[i] * Ma[i][j] for i in range(K.n)) for j in range(K.n)]
                )
        return NfIdeal(K, rows)

    def scale(self, m):
        assert m > 0
        return NfIdeal(self.K, [[m * x for x in row] for row in self.H], already_hnf=True)

    def power(self, e):
        assert e >= 0
        out = unit_ideal(self.K)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def intersect(self, other):
        assert self.K is other.K
        n = self.K.n
        stacked = [list(r) for r in self.H] + [list(r) for r in other.H]
        ker = intlinalg.left_kernel_int(stacked)
        rows = []
        for v in ker:
            rows.append(
                [sum(v[i] * self.H[i][j] for i in range(n)) for j in range(n)]
            )
        return NfIdeal(self.K, rows)

    def is_coprime_to(self, other):
        return (self + other).norm() == 1


def unit_ideal(K):
    return NfIdeal(K, intlinalg.identity_mat(K.n), already_hnf=True)


def int_ideal(K, m):
    assert m != 0
    m = abs(m)
    return NfIdeal(K, [[m if i == j else 0 for j in range(K.n)] for i in range(K.n)], already_hnf=True)


def ideal_from_elements(K, elts):
    rows = []
    for x in elts:
        x = K.coerce(x)
        if x.is_zero():
            continue
        rows.extend(K.mul_matrix_ibasis(x))
    return NfIdeal(K, rows)


def principal_ideal(K, x):
    return ideal_from_elements(K, [x])


def colon(a, b):
    """(a : b) = {x in K : x b <= a} for integral ideals, as a FracIdeal."""
    assert a.K is b.K
    K = a.K
    n = K.n
    m = b.norm()
    ainv = intlinalg.inv_frac(a.H)
    cols = []
    for brow in b.H:
        Mb = K.mul_matrix_ibasis(K.from_ibasis(brow))
        T = intlinalg.mat_mul_frac(Mb, ainv)
        cols.append(T)
    D = 1
    for T in cols:
        for row in T:
            for x in row:
                D = _lcm(D, Fraction(x).denominator)
    P = []
    for i in range(n):
        wide = []
        for T in cols:
            wide.extend(int(x * D) for x in T[i])
        P.append(wide)
    mod = m * D
    stacked = P + [[mod if i == j else 0 for j in range(n * n)] for i in range(n * n)]
    ker = intlinalg.left_kernel_int(stacked)
    rows = [v[:n] for v in ker]
    num = NfIdeal(K, rows)
    return FracIdeal(K, num, m)


class FracIdeal:
    """num/den with num a nonzero integral ideal and den a positive int."""

    __slots__ = ("K", "num", "den")

    def __init__(self, K, num, den=1):
        assert den > 0
        g = den
        for row in num.H:
            for x in row:
                g = gcd(g, x)
        if g > 1:
            num = NfIdeal(K, [[x // g for x in row] for row in num.H], already_hnf=True)
            den //= g
        self.K = K
        self.num = num
        self.den = den

    def __repr__(self):
        return "FracIdeal(norm=%s)" % (self.norm(),)

    def __eq__(self, other):
        return (
            isinstance(other, FracIdeal)
            and self.K is other.K
            and self.den == other.den
            and self.num == other.num
        )

    def is_integral(self):
        return self.den == 1

    def to_integral(self):
        assert self.den == 1
        return self.num

    def norm(self):
        return Fraction(self.num.norm(), self.den ** self.K.n)

    def __add__(self, other):
        if isinstance(other, NfIdeal):
            other = FracIdeal(other.K, other)
        assert self.K is other.K
        return FracIdeal(
            self.K,
            self.num.scale(other.den) + other.num.scale(self.den),
            self.den * other.den,
        )

    def __mul__(self, other):
        if isinstance(other, NfIdeal):
            other = FracIdeal(other.K, other)
        assert self.K is other.K
        return FracIdeal(self.K, self.num * other.num, self.den * other.den)

    def scale(self, q):
        q = Fraction(q)
        assert q > 0
        return FracIdeal(self.K, self.num.scale(q.numerator), self.den * q.denominator)

    def inverse(self):
        inv = colon(unit_ideal(self.K), self.num)
        return inv.scale(self.den)

    def contains(self, x):
        return self.num.contains(self.K.coerce(x) * self.den)


def fractional_ideal(K, a):
    if isinstance(a, FracIdeal):
        return a
    return FracIdeal(K, a)


def principal_frac(K, x):
    """The principal fractional ideal xO for nonzero x in K."""
    x = K.coerce(x)
    assert not x.is_zero()
    d = 1
    for c in x.to_ibasis():
        d = _lcm(d, c.denominator)
    return FracIdeal(K, principal_ideal(K, x * d), d)


def ideal_inverse(a):
    return FracIdeal(a.K, a).inverse()


# ---------------------------------------------------------------------------
# prime ideals


class PrimeIdeal(NfIdeal):
    """Prime over p with residue degree f; ramification index and the
    anti-uniformizer are computed on construction and verified."""

    __slots__ = ("p", "f", "e", "banti", "_mulb", "_two")

    def __init__(self, K, rows, p, f):
        NfIdeal.__init__(self, K, rows)
        self.p = p
        self.f = f
        assert self.norm() == p ** f
        self.banti = _anti_uniformizer(self)
        self._mulb = K.mul_matrix_ibasis(K.from_ibasis(self.banti))
        one = [0] * K.n
        one[0] = p
        self.e = self.val_coords(one)
        self._two = None

    def val_coords(self, coords):
        """Exact valuation of the integral element with these ibasis
        coordinates."""
        p = self.p
        c = list(coords)
        assert any(c), "valuation of zero"
        M = self._mulb
        n = len(c)
        k = 0
        while True:
            c2 = [sum(c[i] * M[i][j] for i in range(n)) for j in range(n)]
            if any(x % p for x in c2):
                return k
            c = [x // p for x in c2]
            k += 1

    def val_element(self, x):
        x = self.K.coerce(x)
        co = x.to_ibasis()
        d = 1
        for c in co:
            d = _lcm(d, c.denominator)
        num = [int(c * d) for c in co]
        v = self.val_coords(num)
        if d > 1:
            dc = [0] * self.K.n
            dc[0] = d
            v -= self.val_coords(dc)
        return v

    def val_ideal(self, a):
        if isinstance(a, FracIdeal):
            v = min(self.val_coords(row) for row in a.num.H)
            if a.den > 1:
                dc = [0] * self.K.n
                dc[0] = a.den
                v -= self.val_coords(dc)
            return v
        return min(self.val_coords(row) for row in a.H)

    def two_element(self, seed=0):
        """(p, alpha) with p O + alpha O equal to this prime."""
        if self._two is not None:
            return self._two
        K = self.K
        rng = random.Random((seed, self.key()).__hash__())
        rows = self.H
        box = 1
        while True:
            co = [rng.randrange(-box, box + 1) for _ in range(K.n)]
            cand = [
                sum(co[i] * rows[i][j] for i in range(K.n)) for j in range(K.n)
            ]
            if not any(cand):
                box += 1
                continue
            alpha = K.from_ibasis(cand)
            test = ideal_from_elements(K, [self.p, alpha])
            if test.norm() == self.norm():
                self._two = (self.p, alpha)
                return self._two
            box += 1


def _anti_uniformizer(P):
    """Row b of (pO : P) with b not in pO; b/p has valuation -1 at P and
    is integral at every other prime."""
    K = P.K
    quo = colon(int_ideal(K, P.p), P)
    assert quo.is_integral()
    for row in quo.num.H:
        if any(x % P.p for x in row):
            return list(row)
    raise AssertionError("colon ideal contained in pO")


def _decompose_easy(K, p):
    """p does not divide the index: Dedekind-Kummer via factoring f mod p."""
    out = []
    fac = polys.factor_mod_p(K.f, p)
    for g, e in fac:
        glift = [c % p for c in g]
        _, rem = polys.pdivmod_frac([Fraction(c) for c in glift], [Fraction(c) for c in K.f])
        gtheta = K.elt(rem)
        P = PrimeIdeal(K, _gens_rows(K, p, gtheta), p, polys.deg(g))
        assert P.e == e
        out.append(P)
    return out


def _gens_rows(K, p, alpha):
    rows = [[p if i == j else 0 for j in range(K.n)] for i in range(K.n)]
    if not alpha.is_zero():
        rows.extend(K.mul_matrix_ibasis(alpha))
    return rows


def _decompose_hard(K, p):
    """p divides the index: split O/pO as a finite commutative algebra;
    maximal ideals are kernels of the projections onto the field blocks."""
    n = K.n
    table = [
        [[x % p for x in K.mt[i][j]] for j in range(n)]
        for i in range(n)
    ]
    unit = [1] + [0] * (n - 1)
    A = FpAlgebra(p, table, unit)
    rad, Q, proj, lift, blocks = wedderburn(A, seed=1)
    out = []
    for i, blk in enumerate(blocks):
        assert blk.msize == 1, "O/pO must be commutative"
        mi = [list(r) for r in rad]
        for j, other in enumerate(blocks):
            if j != i:
                mi.extend(lift(v) for v in other.basis)
        rows = [[p if s == t else 0 for t in range(n)] for s in range(n)]
        rows.extend(mi)
        out.append(PrimeIdeal(K, rows, p, blk.field.k))
    return out


def prime_decomposition(K, p):
    """Sorted primes over p, cached on the field."""
    key = ("primes", p)
    got = K._cache.get(key)
    if got is not None:
        return got
    assert arith.is_prime(p), "modulus must be prime"
    if K.index % p:
        out = _decompose_easy(K, p)
    else:
        out = _decompose_hard(K, p)
    assert sum(P.e * P.f for P in out) == K.n
    out.sort(key=lambda P: P.key())
    K._cache[key] = out
    return out


def factor_ideal(a, factor_limit=None):
    """[(P, e)] with product equal to a; primes sorted by (p, HNF key).

    With factor_limit set, a norm whose factorization stalls raises
    BoundsExceeded instead of grinding on a large composite.
    """
    K = a.K
    if isinstance(a, FracIdeal):
        pos = factor_ideal(a.num, factor_limit)
        if a.den == 1:
            return pos
        neg = factor_ideal(int_ideal(K, a.den), factor_limit)
        acc = {}
        for P, e in pos:
            acc[P.key()] = (P, e)
        for P, e in neg:
            k = P.key()
            have = acc.get(k)
            acc[k] = (P, (have[1] if have else 0) - e)
        return [pe for _, pe in sorted(acc.items()) if pe[1] != 0]
    N = a.norm()
    if N == 1:
        return []
    if factor_limit is None:
        fac = arith.factorint(N)
    else:
        fac, cof = arith.factorint(N, partial_limit=factor_limit)
        if cof != 1:
            raise BoundsExceeded("ideal norm has an unfactored part: %d" % cof)
    out = []
    check = 1
    for p in sorted(fac):
        for P in prime_decomposition(K, p):
            e = P.val_ideal(a)
            if e:
                out.append((P, e))
                check *= P.norm() ** e
    assert check == N, "valuations do not account for the norm"
    return out


# ---------------------------------------------------------------------------
# weak approximation


def exact_valuation_element(K, targets):
    """Deterministic integral x with v_P(x) = k for each (P, k) target
    and v >= 0 elsewhere; all target primes must be known explicitly.

    Recursive split: for S = S0 + S1 take e0 + e1 = 1 with e_j in
    prod_{S_j} P^{k+1}; then e0*x1 + e1*x0 carries the exact valuations
    of x_j on S_j. Base case is a uniformizer power; some HNF row of a
    prime always has valuation one, since the minimum over rows is one.
    """
    assert targets, "need at least one target"
    keys = [P.key() for P, _ in targets]
    assert len(set(keys)) == len(keys), "targets must be distinct primes"
    assert all(k >= 0 for _, k in targets)
    x = _exact_val_rec(K, list(targets))
    for P, k in targets:
        assert P.val_element(x) == k, "exact valuation postcondition"
    return x


def _exact_val_rec(K, targets):
    if len(targets) == 1:
        P, k = targets[0]
        if k == 0:
            return K.one()
        pi = next(
            K.from_ibasis(row) for row in P.H if P.val_coords(row) == 1
        )
        return pi ** k
    half = len(targets) // 2
    s0, s1 = targets[:half], targets[half:]
    a0 = _product_power(K, s0)
    a1 = _product_power(K, s1)
    e0, e1 = _split_of_unity(K, a0, a1)
    x0 = _exact_val_rec(K, s0)
    x1 = _exact_val_rec(K, s1)
    return e0 * x1 + e1 * x0


def _product_power(K, targets):
    out = unit_ideal(K)
    for P, k in targets:
        out = out * P.power(k + 1)
    return out


def _split_of_unity(K, a0, a1):
    """e0 in a0, e1 in a1 with e0 + e1 = 1, for coprime integral ideals."""
    stacked = [list(r) for r in a0.H] + [list(r) for r in a1.H]
    one = [1] + [0] * (K.n - 1)
    sol = intlinalg.solve_int_left(stacked, one)
    assert sol is not None, "ideals not coprime"
    e0 = [sum(sol[i] * a0.H[i][j] for i in range(K.n)) for j in range(K.n)]
    e1 = [o - c for o, c in zip(one, e0)]
    return K.from_ibasis(e0), K.from_ibasis(e1)


def _small_prime_part(K, a, cut):
    """(a0, a1) with a = a0*a1, a0 supported on primes under the cut and
    a1 coprime to them; only trial division by small primes is used."""
    a0 = unit_ideal(K)
    N = a.norm()
    for p in arith.primes_below(cut):
        if N % p:
            continue
        for P in prime_decomposition(K, p):
            v = P.val_ideal(a)
            if v:
                a0 = a0 * P.power(v)
    a1 = colon(a, a0)
    assert a1.is_integral()
    return a0, a1.num


def _coprime_divisor(b, a):
    """Largest divisor of b coprime to a, via ideal sums and division."""
    c = b
    while True:
        g = c + a
        if g.norm() == 1:
            return c
        c2 = colon(c, g)
        assert c2.is_integral()
        c = c2.num


def weak_approximation(a, b, seed=0, stats=None):
    """x in a with v_P(x) = v_P(a) at every prime P dividing b.

    Split construction: S collects the primes below a cut y solved from
    C*y*log(y) = d*log(min(b)); the S-part a0 gets a deterministic exact
    valuation element, the rest gets a uniform draw from a1/(a1*b1)
    retried until x1*a1^{-1} is coprime to b1, and the two are merged as
    e0*x1 + e1*x0 with e_i in a_i^2*c_i, c_i the b_i-part coprime to a.
    """
    K = a.K
    assert isinstance(a, NfIdeal) and isinstance(b, NfIdeal)
    if stats is not None:
        stats["calls"] = stats.get("calls", 0) + 1
    amin = a.minimum()
    bmin = b.minimum()
    if amin == 1 or bmin == 1 or K.n == 1:
        x = K.coerce(amin)
        _check_weak_approx(a, b, x)
        return x
    cut = _split_cut(K.n, bmin)
    a0, a1 = _small_prime_part(K, a, cut)
    b0, b1 = _small_prime_part(K, b, cut)
    targets = {}
    for src in (a0, b0):
        for P, _ in factor_ideal(src):
            targets[P.key()] = (P, P.val_ideal(a))
    if targets:
        x0 = exact_valuation_element(K, [pe for _, pe in sorted(targets.items())])
    else:
        x0 = K.one()
    x1 = _good_element(a1, b1, seed, stats)
    c0 = _coprime_divisor(b0, a)
    c1 = _coprime_divisor(b1, a)
    e0, e1 = _split_of_unity(K, a0 * a0 * c0, a1 * a1 * c1)
    x = e0 * x1 + e1 * x0
    _check_weak_approx(a, b, x)
    return x


def _split_cut(d, bmin):
    target = d * math.log(bmin) / 0.5  # the constant C of the proof
    y = 3.0
    while y * math.log(y) < target:
        y *= 1.25
    return max(3, int(y) + 1)


def _good_element(a1, b1, seed, stats):
    """Uniform draws from a1/(a1*b1) until the lift is good: x1 in a1
    with x1*a1^{-1} coprime to b1. Needs no factorization of b1."""
    K = a1.K
    if b1.norm() == 1:
        return K.from_ibasis(a1.H[0])
    rng = random.Random(seed)
    M = b1.norm()
    a1inv = fractional_ideal(K, a1).inverse()
    tries = 0
    while True:
        tries += 1
        assert tries < 100000, "good-element sampling stalled"
        co = [rng.randrange(M) for _ in range(K.n)]
        cand = [
            sum(co[i] * a1.H[i][j] for i in range(K.n)) for j in range(K.n)
        ]
        if any(cand):
            x1 = K.from_ibasis(cand)
            c = fractional_ideal(K, principal_ideal(K, x1)) * a1inv
            if c.is_integral() and c.num.is_coprime_to(b1):
                return x1
        if stats is not None:
            stats["retries"] = stats.get("retries", 0) + 1


def _check_weak_approx(a, b, x):
    assert a.contains(x), "weak approximation: x not in a"
    for P, _ in factor_ideal(b):
        assert P.val_element(x) == P.val_ideal(a), "weak approximation postcondition"


def coprime_representative(a, b, seed=0, stats=None):
    """x in K* with x*a integral and coprime to b.

    Reduction to weak approximation on min(a)*a^{-1}: an element y there
    with exact valuations at the primes of b gives x = y/min(a)."""
    K = a.K
    if isinstance(a, FracIdeal):
        x = coprime_representative(a.num, b, seed=seed, stats=stats)
        return x * a.den
    m0 = a.minimum()
    c = colon(int_ideal(K, m0), a)
    assert c.is_integral()
    y = weak_approximation(c.num, b, seed=seed, stats=stats)
    x = y * Fraction(1, m0)
    moved = FracIdeal(K, principal_ideal(K, y) * a, m0)
    assert moved.is_integral()
    assert moved.num.is_coprime_to(b)
    return x
