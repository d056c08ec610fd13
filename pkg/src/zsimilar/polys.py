"""Polynomial arithmetic and factorization over Z, Q, and F_p.

Polynomials are coefficient lists in ascending degree. Integer
factorization of polynomials is Zassenhaus: squarefree split, factor
mod a good prime, Hensel lift past the coefficient bound, recombine.
"""

import random
from fractions import Fraction
from math import gcd, isqrt

from zsimilar.arith import inv_mod, is_prime
from zsimilar.intlinalg import det_int


def trim(p):
    while p and not p[-1]:
        p = p[:-1]
    return p


def deg(p):
    return len(trim(p)) - 1


def padd(f, g):
    n = max(len(f), len(g))
    return trim([(f[i] if i < len(f) else 0) + (g[i] if i < len(g) else 0) for i in range(n)])


def psub(f, g):
    n = max(len(f), len(g))
    return trim([(f[i] if i < len(f) else 0) - (g[i] if i < len(g) else 0) for i in range(n)])


def pneg(f):
    return [-c for c in f]


def pmul(f, g):
    f, g = trim(f), trim(g)
    if not f or not g:
        return []
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                if b:
                    out[i + j] += a * b
    return out


def pscal(c, f):
    return trim([c * a for a in f])


def peval(f, x):
    out = 0
    for c in reversed(f):
        out = out * x + c
    return out


def derivative(f):
    return trim([i * c for i, c in enumerate(f)][1:])


def pdivmod_frac(f, g):
    """Quotient and remainder over Q."""
    f = [Fraction(c) for c in trim(f)]
    g = [Fraction(c) for c in trim(g)]
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    q = [Fraction(0)] * max(0, len(f) - len(g) + 1)
    r = f[:]
    while len(r) >= len(g) and any(r):
        r = trim(r)
        if len(r) < len(g):
            break
        c = r[-1] / g[-1]
        d = len(r) - len(g)
        q[d] = c
        for i, gc in enumerate(g):
            r[d + i] -= c * gc
        r = trim(r)
    return trim(q), trim(r)


def pdivmod_monic_z(f, g):
    """Quotient and remainder by a monic integer polynomial, exact over Z."""
    assert g and g[-1] == 1
    r = list(trim(f))
    q = [0] * max(0, len(r) - len(g) + 1)
    while len(r) >= len(g):
        c = r[-1]
        d = len(r) - len(g)
        q[d] = c
        for i, gc in enumerate(g):
            r[d + i] -= c * gc
        r = trim(r)
    return q, r


def divides_z(g, f):
    """Exact divisibility test of integer polynomials (g | f over Z)."""
    q, r = pdivmod_frac(f, g)
    if trim(r):
        return None
    qi = []
    for c in q:
        if c.denominator != 1:
            return None
        qi.append(int(c))
    return qi


def content(f):
    c = 0
    for a in f:
        c = gcd(c, a)
    return c


def primitive(f):
    f = trim(f)
    if not f:
        return [], 0
    c = content(f)
    if f[-1] < 0:
        c = -c
    return [a // c for a in f], c


def gcd_q(f, g):
    """Monic gcd over Q returned as a primitive integer polynomial."""
    a = [Fraction(c) for c in trim(f)]
    b = [Fraction(c) for c in trim(g)]
    while b:
        _, r = pdivmod_frac(a, b)
        a, b = b, trim(r)
    if not a:
        return []
    den = 1
    for c in a:
        den = den * c.denominator // gcd(den, c.denominator)
    ai = [int(c * den) for c in a]
    return primitive(ai)[0]


def squarefree_part_q(f):
    """Primitive squarefree part of an integer polynomial."""
    fprim = primitive(trim(f))[0]
    d = derivative(fprim)
    if not trim(d):
        raise ValueError("constant or zero polynomial")
    g = gcd_q(fprim, d)
    quo = divides_z(g, fprim)  # exact: both primitive, Gauss's lemma
    return primitive(quo)[0]


def yun_squarefree(f):
    """Yun decomposition of a primitive integer polynomial:
    returns [(g1, 1), (g2, 2), ...] with f = lc * prod gi^i, gi squarefree,
    pairwise coprime, primitive."""
    f = primitive(trim(f))[0]
    df = derivative(f)
    a = gcd_q(f, df)
    if deg(a) == 0:
        return [(f, 1)]
    b = divides_z(a, f)
    c = divides_z(a, df)
    out = []
    i = 1
    while deg(b) > 0:
        d = psub(c, derivative(b))
        if not trim(d):
            # all remaining factors share this multiplicity
            out.append((primitive(b)[0], i))
            break
        g = gcd_q(b, d)
        if deg(g) > 0:
            out.append((primitive(g)[0], i))
        b = divides_z(g, b)
        c = divides_z(g, d)
        i += 1
    return out


def resultant(f, g):
    """Resultant via the Sylvester matrix (exact integer determinant)."""
    f, g = trim(f), trim(g)
    m, n = len(f) - 1, len(g) - 1
    if m < 0 or n < 0:
        return 0
    if m == 0:
        return f[0] ** n
    if n == 0:
        return g[0] ** m
    size = m + n
    S = [[0] * size for _ in range(size)]
    fd = list(reversed(f))
    gd = list(reversed(g))
    for i in range(n):
        for j, c in enumerate(fd):
            S[i][i + j] = c
    for i in range(m):
        for j, c in enumerate(gd):
            S[n + i][i + j] = c
    return det_int(S)


def discriminant(f):
    f = trim(f)
    d = len(f) - 1
    r = resultant(f, derivative(f))
    s = -1 if (d * (d - 1) // 2) % 2 else 1
    q, rem = divmod(s * r, f[-1])
    assert rem == 0
    return q


# ---------------------------------------------------------------------------
# arithmetic mod a prime p


def mp_trim(f, p):
    f = [c % p for c in f]
    while f and not f[-1]:
        f.pop()
    return f


def mp_add(f, g, p):
    n = max(len(f), len(g))
    return mp_trim(
        [(f[i] if i < len(f) else 0) + (g[i] if i < len(g) else 0) for i in range(n)], p
    )


def mp_sub(f, g, p):
    n = max(len(f), len(g))
    return mp_trim(
        [(f[i] if i < len(f) else 0) - (g[i] if i < len(g) else 0) for i in range(n)], p
    )


def mp_mul(f, g, p):
    if not f or not g:
        return []
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] = (out[i + j] + a * b) % p
    return mp_trim(out, p)


def mp_divmod(f, g, p):
    f = mp_trim(f, p)
    g = mp_trim(g, p)
    if not g:
        raise ZeroDivisionError
    inv = inv_mod(g[-1], p)
    q = [0] * max(0, len(f) - len(g) + 1)
    r = f[:]
    while len(r) >= len(g):
        c = r[-1] * inv % p
        d = len(r) - len(g)
        q[d] = c
        for i, gc in enumerate(g):
            r[d + i] = (r[d + i] - c * gc) % p
        while r and not r[-1]:
            r.pop()
    return mp_trim(q, p), r


def mp_monic(f, p):
    f = mp_trim(f, p)
    if not f or f[-1] == 1:
        return f
    inv = inv_mod(f[-1], p)
    return [c * inv % p for c in f]


def mp_gcd(f, g, p):
    a, b = mp_trim(f, p), mp_trim(g, p)
    while b:
        _, r = mp_divmod(a, b, p)
        a, b = b, r
    return mp_monic(a, p)


def mp_pow_mod(f, e, modpoly, p):
    result = [1]
    base = mp_divmod(f, modpoly, p)[1]
    while e:
        if e & 1:
            result = mp_divmod(mp_mul(result, base, p), modpoly, p)[1]
        base = mp_divmod(mp_mul(base, base, p), modpoly, p)[1]
        e >>= 1
    return result


def mp_derivative(f, p):
    return mp_trim([i * c for i, c in enumerate(f)][1:], p)


def sqfree_decomp_mod_p(f, p):
    """[(g, multiplicity)] with f = lc * prod g^mult, g monic squarefree."""
    f = mp_monic(f, p)
    out = {}

    def rec(f, mult):
        if deg(f) < 1:
            return
        df = mp_derivative(f, p)
        if not df:
            # f is a p-th power: take the p-th root coefficientwise
            root = [f[i] for i in range(0, len(f), p)]
            rec(mp_trim(root, p), mult * p)
            return
        a = mp_gcd(f, df, p)
        w = mp_divmod(f, a, p)[0]
        i = 1
        while deg(w) > 0:
            y = mp_gcd(w, a, p)
            z = mp_divmod(w, y, p)[0]
            if deg(z) > 0:
                key = tuple(z)
                out[key] = out.get(key, 0) + mult * i
            a = mp_divmod(a, y, p)[0]
            w = y
            i += 1
        if deg(a) > 0:
            rec(a, mult)

    rec(f, 1)
    return [(list(k), m) for k, m in out.items()]


def ddf(f, p):
    """Distinct-degree split of a monic squarefree f mod p:
    [(product_of_irreducibles_of_degree_d, d)]."""
    out = []
    x = [0, 1]
    h = mp_divmod(x, f, p)[1]
    d = 0
    while deg(f) > 0:
        d += 1
        if 2 * d > deg(f):
            out.append((f, deg(f)))
            break
        h = mp_pow_mod(h, p, f, p)
        g = mp_gcd(mp_sub(h, x, p), f, p)
        if deg(g) > 0:
            out.append((g, d))
            f = mp_divmod(f, g, p)[0]
            h = mp_divmod(h, f, p)[1]
    return out


def edf(f, d, p, rng):
    """Split a monic squarefree product of degree-d irreducibles mod p."""
    n = deg(f)
    if n == d:
        return [f]
    while True:
        a = [rng.randrange(p) for _ in range(n)]
        a = mp_trim(a, p)
        if deg(a) < 1:
            continue
        if p == 2:
            # trace map over F_{2^d}
            t = a
            cur = a
            for _ in range(d - 1):
                cur = mp_pow_mod(cur, 2, f, p)
                t = mp_add(t, cur, p)
            g = mp_gcd(t, f, p)
        else:
            e = (p**d - 1) // 2
            b = mp_pow_mod(a, e, f, p)
            g = mp_gcd(mp_sub(b, [1], p), f, p)
        if 0 < deg(g) < n:
            return edf(g, d, p, rng) + edf(mp_divmod(f, g, p)[0], d, p, rng)


def factor_mod_p(f, p, seed=0):
    """Monic irreducible factors with multiplicity: [(g, m)], sorted."""
    assert is_prime(p)
    rng = random.Random((seed, p, tuple(mp_trim(f, p))).__hash__())
    result = []
    for g, mult in sqfree_decomp_mod_p(f, p):
        for h, d in ddf(g, p):
            for irr in edf(h, d, p, rng):
                result.append((irr, mult))
    result.sort(key=lambda t: (deg(t[0]), t[0]))
    return result


def is_irreducible_mod_p(f, p):
    f = mp_monic(f, p)
    n = deg(f)
    if n <= 0:
        return False
    if n == 1:
        return True
    x = [0, 1]
    # x^{p^n} = x mod f, and gcd(x^{p^{n/l}} - x, f) = 1 for primes l | n
    h = x
    for _ in range(n):
        h = mp_pow_mod(h, p, f, p)
    if mp_trim(mp_sub(h, x, p), p):
        return False
    from zsimilar.arith import factorint

    for l in factorint(n):
        h = x
        for _ in range(n // l):
            h = mp_pow_mod(h, p, f, p)
        if deg(mp_gcd(mp_sub(h, x, p), f, p)) != 0:
            return False
    return True


# ---------------------------------------------------------------------------
# Hensel lifting and factorization over Z


def _center(c, m):
    c %= m
    return c - m if 2 * c > m else c


def _mm_trim(f, m):
    f = [c % m for c in f]
    while f and not f[-1]:
        f.pop()
    return f


def _mm_mul(f, g, m):
    if not f or not g:
        return []
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] = (out[i + j] + a * b) % m
    return _mm_trim(out, m)


def _mm_divmod_monic(f, g, m):
    # g monic mod m, so division works over Z/m
    assert g and g[-1] % m == 1
    r = _mm_trim(f, m)
    q = [0] * max(0, len(r) - len(g) + 1)
    while len(r) >= len(g):
        c = r[-1] % m
        d = len(r) - len(g)
        q[d] = c
        for i, gc in enumerate(g):
            r[d + i] = (r[d + i] - c * gc) % m
        while r and not r[-1]:
            r.pop()
    return _mm_trim(q, m), r


def _mm_sub(f, g, m):
    n = max(len(f), len(g))
    return _mm_trim(
        [(f[i] if i < len(f) else 0) - (g[i] if i < len(g) else 0) for i in range(n)], m
    )


def _mm_add(f, g, m):
    n = max(len(f), len(g))
    return _mm_trim(
        [(f[i] if i < len(f) else 0) + (g[i] if i < len(g) else 0) for i in range(n)], m
    )


def _hensel_step(m, f, g, h, s, t):
    """One quadratic lift: from f = g*h, s*g + t*h = 1 (mod m), g and h
    monic, to the same congruences mod m^2."""
    mm = m * m
    e = _mm_sub(f, _mm_mul(g, h, mm), mm)
    q, r = _mm_divmod_monic(_mm_mul(s, e, mm), h, mm)
    g1 = _mm_add(g, _mm_add(_mm_mul(t, e, mm), _mm_mul(q, g, mm), mm), mm)
    h1 = _mm_add(h, r, mm)
    b = _mm_sub(_mm_add(_mm_mul(s, g1, mm), _mm_mul(t, h1, mm), mm), [1], mm)
    c, d = _mm_divmod_monic(_mm_mul(s, b, mm), h1, mm)
    s1 = _mm_sub(s, d, mm)
    t1 = _mm_sub(t, _mm_add(_mm_mul(t, b, mm), _mm_mul(c, g1, mm), mm), mm)
    return g1, h1, s1, t1


def _mp_xgcd(f, g, p):
    """s, t, d with s*f + t*g = d = monic gcd mod p."""
    a, b = mp_trim(f, p), mp_trim(g, p)
    sa, sb = [1], []
    ta, tb = [], [1]
    while b:
        q, r = mp_divmod(a, b, p)
        a, b = b, r
        sa, sb = sb, mp_sub(sa, mp_mul(q, sb, p), p)
        ta, tb = tb, mp_sub(ta, mp_mul(q, tb, p), p)
    if not a:
        return [], [], []
    inv = inv_mod(a[-1], p)
    return (
        mp_trim([c * inv for c in sa], p),
        mp_trim([c * inv for c in ta], p),
        mp_monic(a, p),
    )


def hensel_lift_factors(f, factors, p, target):
    """Lift monic coprime factors of monic f from mod p to mod p^k >= target.

    Returns (lifted_factors, p^k)."""
    if len(factors) == 1:
        m = p
        while m < target:
            m *= m
        return [_mm_trim(f, m)], m

    half = len(factors) // 2
    g0 = [1]
    for fac in factors[:half]:
        g0 = mp_mul(g0, fac, p)
    h0 = [1]
    for fac in factors[half:]:
        h0 = mp_mul(h0, fac, p)
    s, t, d = _mp_xgcd(g0, h0, p)
    assert d == [1], "modular factors are not coprime"
    m = p
    g, h = g0, h0
    while m < target:
        fm2 = _mm_trim(f, m * m)
        g, h, s, t = _hensel_step(m, fm2, g, h, s, t)
        m *= m
    left, _ = hensel_lift_factors(g, factors[:half], p, target)
    right, _ = hensel_lift_factors(h, factors[half:], p, target)
    # left/right were lifted with their own modulus; re-lift mod m is already
    # guaranteed since their target equals ours
    return left + right, m


def mignotte_bound(f):
    """Bound on the absolute coefficients of any monic factor of monic f."""
    n = deg(f)
    norm2 = isqrt(sum(c * c for c in f)) + 1
    return 2**n * norm2


def _factor_squarefree_monic_z(f, seed=0):
    """Irreducible factors of a monic squarefree integer polynomial."""
    from itertools import combinations

    n = deg(f)
    if n == 1:
        return [f]
    # pick a prime keeping f squarefree, preferring few modular factors
    best = None
    found = 0
    p = 2
    while found < 4:
        if is_prime(p) and f[-1] % p:
            df = mp_derivative(f, p)
            if deg(mp_gcd(mp_trim(f, p), df, p)) == 0:
                fac = factor_mod_p(f, p, seed=seed)
                found += 1
                if best is None or len(fac) < len(best[1]):
                    best = (p, [g for g, _ in fac])
                if len(fac) == 1:
                    break
        p += 1
    p, modular = best
    if len(modular) == 1:
        return [f]
    target = 2 * mignotte_bound(f) + 1
    lifted, m = hensel_lift_factors(f, modular, p, target)
    # recombine subsets
    result = []
    rest = f
    pool = list(lifted)
    k = 1
    while 2 * k <= len(pool):
        hit = True
        while hit and 2 * k <= len(pool):
            hit = False
            for combo in combinations(range(len(pool)), k):
                prod = [1]
                for i in combo:
                    prod = _mm_mul(prod, pool[i], m)
                cand = [_center(c, m) for c in prod]
                cand = trim(cand)
                quo = divides_z(cand, rest)
                if quo is not None:
                    result.append(cand)
                    rest = quo
                    pool = [pool[i] for i in range(len(pool)) if i not in combo]
                    hit = True
                    break
        k += 1
    if deg(rest) > 0:
        result.append(rest)
    result.sort(key=lambda g: (deg(g), g))
    return result


def factor_poly_q(f, seed=0):
    """Factor an integer polynomial over Q.

    Returns (content, [(irreducible_primitive, multiplicity)]), content
    carrying the sign and integer content of f."""
    f = trim(f)
    if not f:
        raise ValueError("zero polynomial")
    fprim, cont = primitive(f)
    if deg(fprim) == 0:
        return cont, []
    out = []
    for g, mult in yun_squarefree(fprim):
        lc = g[-1]
        if lc != 1:
            # monicize: h(x) = lc^{d-1} g(x/lc) is monic with integer coeffs
            d = deg(g)
            h = [g[i] * lc ** (d - 1 - i) for i in range(d)] + [1]
            facs = _factor_squarefree_monic_z(trim(h), seed=seed)
            back = []
            for fa in facs:
                da = deg(fa)
                raw = [fa[i] * lc**i for i in range(da + 1)]
                back.append(primitive(raw)[0])
            facs = back
        else:
            facs = _factor_squarefree_monic_z(g, seed=seed)
        for fa in facs:
            out.append((fa, mult))
    out.sort(key=lambda t: (deg(t[0]), t[0]))
    return cont, out


def poly_from_roots(roots):
    f = [1]
    for r in roots:
        f = pmul(f, [-r, 1])
    return f
