"""Elementary number theory: primality, factoring, CRT, orders.

Factoring is exact trial division plus Brent's rho; fine for the sizes
this library meets (conductors, discriminants, residue field orders).
factorint can also stop early and report an unfactored cofactor, which
the randomized valuation machinery uses to avoid hard factorizations.
"""

import random
from math import gcd, isqrt

_SMALL_PRIMES = []


def _sieve(limit=10000):
    global _SMALL_PRIMES
    if _SMALL_PRIMES:
        return _SMALL_PRIMES
    mark = bytearray([1]) * (limit + 1)
    mark[0:2] = b"\x00\x00"
    for i in range(2, isqrt(limit) + 1):
        if mark[i]:
            mark[i * i :: i] = b"\x00" * len(mark[i * i :: i])
    _SMALL_PRIMES = [i for i in range(2, limit + 1) if mark[i]]
    return _SMALL_PRIMES


def primes_below(n):
    """Primes p < n; falls back to a direct test past the sieve range."""
    cached = _sieve()
    if n <= cached[-1] + 1:
        out = []
        for p in cached:
            if p >= n:
                break
            out.append(p)
        return out
    return cached + [m for m in range(cached[-1] + 1, n) if is_prime(m)]


# Miller-Rabin with these bases is deterministic below 3.3 * 10^24
_MR_BASES = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37]
_MR_LIMIT = 3317044064679887385961981


def is_prime(n):
    if n < 2:
        return False
    for p in _sieve()[:60]:
        if n == p:
            return True
        if n % p == 0:
            return False
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    if n < _MR_LIMIT:
        bases = _MR_BASES
    else:
        rng = random.Random(n)
        bases = _MR_BASES + [rng.randrange(2, n - 1) for _ in range(30)]
    for a in bases:
        a %= n
        if a in (0, 1, n - 1):
            continue
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _brent(n, seed):
    rng = random.Random(seed)
    if n % 2 == 0:
        return 2
    while True:
        y = rng.randrange(1, n)
        c = rng.randrange(1, n)
        m = 128
        g = r = q = 1
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = gcd(q, n)
                k += m
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = gcd(abs(x - ys), n)
        if g != n:
            return g


def factorint(n, partial_limit=None):
    """Prime factorization {p: e} of |n| (n != 0).

    With partial_limit set, primes above the limit are only extracted if
    they fall out of trial division or rho quickly; a composite or large
    leftover is returned separately. Returns (factors, cofactor) in that
    mode, cofactor 1 when complete.
    """
    n = abs(n)
    if n == 0:
        raise ValueError("0 has no factorization")
    fac = {}
    for p in _sieve():
        if p * p > n:
            break
        while n % p == 0:
            fac[p] = fac.get(p, 0) + 1
            n //= p
    stack = [n] if n > 1 else []
    cofactor = 1
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if is_prime(m):
            fac[m] = fac.get(m, 0) + 1
            continue
        if partial_limit is not None and m > partial_limit:
            cofactor *= m
            continue
        d = _brent(m, m)
        stack.append(d)
        stack.append(m // d)
    if partial_limit is not None:
        return fac, cofactor
    return fac


def divisors(n):
    fac = factorint(n)
    out = [1]
    for p, e in fac.items():
        out = [d * p**k for d in out for k in range(e + 1)]
    return sorted(out)


def crt_pair(r1, m1, r2, m2):
    """x with x = r1 mod m1, x = r2 mod m2; moduli need not be coprime."""
    g, a, b = _xgcd(m1, m2)
    if (r2 - r1) % g:
        raise ValueError("incompatible congruences")
    lcm = m1 // g * m2
    x = (r1 + (r2 - r1) // g * a % (m2 // g) * m1) % lcm
    return x, lcm


def crt_list(residues, moduli):
    x, m = residues[0] % moduli[0], moduli[0]
    for r, mm in zip(residues[1:], moduli[1:]):
        x, m = crt_pair(x, m, r, mm)
    return x


def _xgcd(a, b):
    x, nx = 1, 0
    y, ny = 0, 1
    g, ng = a, b
    while ng:
        q = g // ng
        x, nx = nx, x - q * nx
        y, ny = ny, y - q * ny
        g, ng = ng, g - q * ng
    if g < 0:
        x, y, g = -x, -y, -g
    return g, x, y


def inv_mod(a, m):
    g, x, _ = _xgcd(a % m, m)
    if g != 1:
        raise ZeroDivisionError("not invertible mod m")
    return x % m


def valuation(n, p):
    if n == 0:
        raise ValueError("infinite valuation")
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def multiplicative_order(a, m, group_order=None):
    """Order of a in (Z/m)^x; group_order is any known multiple of it."""
    if gcd(a, m) != 1:
        raise ValueError("element not a unit")
    if group_order is None:
        fac = factorint(m)
        group_order = 1
        for p, e in fac.items():
            group_order *= (p - 1) * p ** (e - 1)
    order = group_order
    for p in factorint(order):
        while order % p == 0 and pow(a, order // p, m) == 1:
            order //= p
    return order


def primitive_root(p):
    """Smallest primitive root modulo an odd prime p."""
    fac = factorint(p - 1)
    for g in range(2, p):
        if all(pow(g, (p - 1) // q, p) != 1 for q in fac):
            return g
    raise ArithmeticError("no primitive root found")


def nth_root_int(n, k):
    """Floor of the k-th root of n >= 0 (integer Newton)."""
    if n < 0:
        raise ValueError("negative")
    if n == 0:
        return 0
    x = 1 << ((n.bit_length() + k - 1) // k)
    while True:
        y = ((k - 1) * x + n // x ** (k - 1)) // k
        if y >= x:
            break
        x = y
    while x**k > n:
        x -= 1
    return x


def is_square(n):
    if n < 0:
        return False
    r = isqrt(n)
    return r * r == n
