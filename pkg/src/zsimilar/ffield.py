"""Finite fields as quotients of F_p[x], with linear algebra and dlogs.

Field elements are coefficient tuples of length k (prime fields use
length-1 tuples so everything stays uniform and hashable). Polynomials
over a field are lists of elements, ascending degree; they feed the
irreducible searches and the Singer-cycle construction for GL(n, q).
"""

from zsimilar.arith import crt_list, factorint, inv_mod, is_prime
from zsimilar.polys import is_irreducible_mod_p, mp_divmod, mp_mul, mp_sub, mp_trim


class FiniteField:
    """F_{p^k} = F_p[x]/(modulus); modulus found deterministically."""

    def __init__(self, p, k=1, modulus=None):
        assert is_prime(p)
        self.p = p
        self.k = k
        self.q = p**k
        if k == 1:
            modulus = [0, 1]
        elif modulus is None:
            modulus = self._find_irreducible(p, k)
        else:
            assert len(modulus) == k + 1 and modulus[-1] == 1
        self.modulus = modulus
        self.zero = (0,) * k
        self.one = (1,) + (0,) * (k - 1)
        # _red[d] = x^{k+d} reduced mod (modulus, p), as a length-k tuple
        self._red = []
        if k > 1:
            cur = [(-c) % p for c in modulus[:-1]]
            self._red.append(tuple(cur))
            for _ in range(k - 2):
                nxt = [0] + cur
                lead = nxt.pop()
                if lead:
                    nxt = [(a + lead * b) % p for a, b in zip(nxt, self._red[0])]
                cur = nxt
                self._red.append(tuple(cur))
        self._gen = None

    @staticmethod
    def _find_irreducible(p, k):
        # smallest monic irreducible of degree k, low coefficients in lex order
        for idx in range(p**k):
            coeffs = []
            t = idx
            for _ in range(k):
                coeffs.append(t % p)
                t //= p
            f = coeffs + [1]
            if is_irreducible_mod_p(f, p):
                return f
        raise ArithmeticError("no irreducible polynomial found")

    def el(self, coeffs):
        """Element from an int sequence (reduced mod p, padded to length k)."""
        c = [int(x) % self.p for x in coeffs[: self.k]]
        c += [0] * (self.k - len(c))
        return tuple(c)

    def from_int(self, c):
        return self.el([c])

    def is_zero(self, a):
        return not any(a)

    def add(self, a, b):
        p = self.p
        return tuple((x + y) % p for x, y in zip(a, b))

    def sub(self, a, b):
        p = self.p
        return tuple((x - y) % p for x, y in zip(a, b))

    def neg(self, a):
        p = self.p
        return tuple((-x) % p for x in a)

    def mul(self, a, b):
        p, k = self.p, self.k
        if k == 1:
            return (a[0] * b[0] % p,)
        prod = [0] * (2 * k - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        prod[i + j] = (prod[i + j] + x * y) % p
        out = prod[:k]
        for d in range(k, 2 * k - 1):
            c = prod[d]
            if c:
                red = self._red[d - k]
                out = [(o + c * r) % p for o, r in zip(out, red)]
        return tuple(out)

    def smul(self, c, a):
        p = self.p
        c = c % p
        return tuple(x * c % p for x in a)

    def inv(self, a):
        if not any(a):
            raise ZeroDivisionError("inverse of zero")
        p = self.p
        if self.k == 1:
            return (inv_mod(a[0], p),)
        # extended Euclid in F_p[x]: s0 * a = gcd modulo the field modulus
        f = mp_trim(list(a), p)
        g = mp_trim(list(self.modulus), p)
        s0, s1 = [1], []
        while g:
            q, r = mp_divmod(f, g, p)
            f, g = g, r
            s0, s1 = s1, mp_sub(s0, mp_mul(q, s1, p), p)
        c = inv_mod(f[0], p)
        return self.el([x * c % p for x in s0])

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pw(self, a, e):
        if e < 0:
            return self.pw(self.inv(a), -e)
        out = self.one
        base = a
        while e:
            if e & 1:
                out = self.mul(out, base)
            base = self.mul(base, base)
            e >>= 1
        return out

    def frob(self, a):
        return self.pw(a, self.p)

    def elements(self):
        p, k = self.p, self.k
        for idx in range(self.q):
            c = []
            t = idx
            for _ in range(k):
                c.append(t % p)
                t //= p
            yield tuple(c)

    def generator(self):
        """A deterministic generator of the multiplicative group."""
        if self._gen is not None:
            return self._gen
        n = self.q - 1
        fac = factorint(n) if n > 1 else {}
        for a in self.elements():
            if not any(a):
                continue
            if all(self.pw(a, n // l) != self.one for l in fac):
                self._gen = a
                return a
        raise ArithmeticError("no generator found")

    def element_order(self, a):
        assert any(a)
        n = self.q - 1
        order = n
        for l in factorint(n):
            while order % l == 0 and self.pw(a, order // l) == self.one:
                order //= l
        return order


# ---------------------------------------------------------------------------
# linear algebra over a FiniteField


def ff_identity(F, n):
    return [[F.one if i == j else F.zero for j in range(n)] for i in range(n)]


def ff_matmul(F, A, B):
    if not A or not B:
        return []
    n = len(B[0])
    out = []
    for row in A:
        orow = []
        for j in range(n):
            acc = F.zero
            for t, a in enumerate(row):
                if any(a):
                    acc = F.add(acc, F.mul(a, B[t][j]))
            orow.append(acc)
        out.append(orow)
    return out


def ff_matvec(F, A, v):
    out = []
    for row in A:
        acc = F.zero
        for a, x in zip(row, v):
            if any(a) and any(x):
                acc = F.add(acc, F.mul(a, x))
        out.append(acc)
    return out


def ff_rref(F, M):
    R = [list(row) for row in M]
    m = len(R)
    n = len(R[0]) if R else 0
    pivots = []
    r = 0
    for c in range(n):
        piv = None
        for i in range(r, m):
            if any(R[i][c]):
                piv = i
                break
        if piv is None:
            continue
        R[r], R[piv] = R[piv], R[r]
        inv = F.inv(R[r][c])
        R[r] = [F.mul(inv, x) for x in R[r]]
        for i in range(m):
            if i != r and any(R[i][c]):
                f = R[i][c]
                R[i] = [F.sub(x, F.mul(f, y)) for x, y in zip(R[i], R[r])]
        pivots.append(c)
        r += 1
        if r == m:
            break
    return R, pivots


def ff_rank(F, M):
    return len(ff_rref(F, M)[1])


def ff_nullspace(F, M):
    """Basis of the right kernel over F."""
    if not M:
        return []
    n = len(M[0])
    R, pivots = ff_rref(F, M)
    free = [j for j in range(n) if j not in pivots]
    out = []
    for f in free:
        v = [F.zero] * n
        v[f] = F.one
        for i, c in enumerate(pivots):
            v[c] = F.neg(R[i][f])
        out.append(v)
    return out


def ff_solve_right(F, A, b):
    """One solution of A x = b over F, or None."""
    m = len(A)
    n = len(A[0]) if A else 0
    aug = [list(A[i]) + [b[i]] for i in range(m)]
    R, pivots = ff_rref(F, aug)
    if n in pivots:
        return None
    x = [F.zero] * n
    for i, c in enumerate(pivots):
        x[c] = R[i][n]
    return x


def ff_inv_mat(F, A):
    n = len(A)
    aug = [list(A[i]) + [F.one if i == j else F.zero for j in range(n)] for i in range(n)]
    R, pivots = ff_rref(F, aug)
    if pivots != list(range(n)):
        raise ZeroDivisionError("singular matrix over finite field")
    return [row[n:] for row in R]


# ---------------------------------------------------------------------------
# discrete logarithms


def bsgs(F, g, h, n):
    """x in [0, n) with g^x = h, where g has order dividing n; None if absent."""
    m = 1
    while m * m < n:
        m += 1
    table = {}
    e = F.one
    for j in range(m):
        table.setdefault(e, j)
        e = F.mul(e, g)
    gm_inv = F.pw(F.inv(g), m)
    cur = h
    for i in range(m + 1):
        if cur in table:
            x = i * m + table[cur]
            if F.pw(g, x) == h:
                return x
        cur = F.mul(cur, gm_inv)
    return None


def dlog(F, g, h, order=None, counter=None):
    """Discrete log of h base g in F^x (Pohlig-Hellman over BSGS).

    order: multiplicative order of g (computed if omitted). Returns x with
    g^x = h, or None when h lies outside <g>. counter, when given, is
    invoked once per dlog instance so profiling can enforce budgets.
    """
    if counter is not None:
        counter()
    if order is None:
        order = F.element_order(g)
    if h == F.one:
        return 0
    residues = []
    moduli = []
    for l, e in factorint(order).items():
        le = l**e
        g_l = F.pw(g, order // le)
        h_l = F.pw(h, order // le)
        gamma = F.pw(g_l, l ** (e - 1))  # element of order l
        x = 0
        for j in range(e):
            exp = l ** (e - 1 - j)
            target = F.pw(F.mul(h_l, F.inv(F.pw(g_l, x))), exp)
            d = bsgs(F, gamma, target, l)
            if d is None:
                return None
            x += d * l**j
        residues.append(x)
        moduli.append(le)
    out = crt_list(residues, moduli) if residues else 0
    return out if F.pw(g, out) == h else None


# ---------------------------------------------------------------------------
# polynomials over a FiniteField (for extension towers and Singer cycles)


def fq_trim(F, f):
    f = list(f)
    while f and not any(f[-1]):
        f.pop()
    return f


def fq_add(F, f, g):
    m = max(len(f), len(g))
    ff = list(f) + [F.zero] * (m - len(f))
    gg = list(g) + [F.zero] * (m - len(g))
    return fq_trim(F, [F.add(a, b) for a, b in zip(ff, gg)])


def fq_sub(F, f, g):
    m = max(len(f), len(g))
    ff = list(f) + [F.zero] * (m - len(f))
    gg = list(g) + [F.zero] * (m - len(g))
    return fq_trim(F, [F.sub(a, b) for a, b in zip(ff, gg)])


def fq_mul(F, f, g):
    if not f or not g:
        return []
    out = [F.zero] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if any(a):
            for j, b in enumerate(g):
                if any(b):
                    out[i + j] = F.add(out[i + j], F.mul(a, b))
    return fq_trim(F, out)


def fq_divmod(F, f, g):
    f = fq_trim(F, f)
    g = fq_trim(F, g)
    if not g:
        raise ZeroDivisionError
    inv = F.inv(g[-1])
    q = [F.zero] * max(0, len(f) - len(g) + 1)
    r = list(f)
    while len(r) >= len(g):
        c = F.mul(r[-1], inv)
        d = len(r) - len(g)
        q[d] = c
        for i, gc in enumerate(g):
            r[d + i] = F.sub(r[d + i], F.mul(c, gc))
        r = fq_trim(F, r)
    return fq_trim(F, q), r


def fq_gcd(F, f, g):
    a, b = fq_trim(F, f), fq_trim(F, g)
    while b:
        _, r = fq_divmod(F, a, b)
        a, b = b, r
    if a:
        inv = F.inv(a[-1])
        a = [F.mul(inv, c) for c in a]
    return a


def fq_pow_mod(F, f, e, modpoly):
    result = [F.one]
    base = fq_divmod(F, f, modpoly)[1]
    while e:
        if e & 1:
            result = fq_divmod(F, fq_mul(F, result, base), modpoly)[1]
        base = fq_divmod(F, fq_mul(F, base, base), modpoly)[1]
        e >>= 1
    return result


def fq_is_irreducible(F, f):
    """Frobenius criterion: x^{q^n} = x mod f, and gcd(x^{q^{n/l}} - x, f)
    trivial for every prime l dividing n."""
    f = fq_trim(F, f)
    n = len(f) - 1
    if n <= 0:
        return False
    if n == 1:
        return True
    x = [F.zero, F.one]
    h = x
    for _ in range(n):
        h = fq_pow_mod(F, h, F.q, f)
    if fq_sub(F, h, x):
        return False
    for l in factorint(n):
        h = x
        for _ in range(n // l):
            h = fq_pow_mod(F, h, F.q, f)
        d = fq_gcd(F, fq_sub(F, h, x), f)
        if len(d) != 1:
            return False
    return True


def _int_to_el(F, idx):
    c = []
    t = idx
    for _ in range(F.k):
        c.append(t % F.p)
        t //= F.p
    return tuple(c)


def fq_find_irreducible(F, n):
    """Deterministic smallest monic irreducible of degree n over F."""
    if n == 1:
        return [F.zero, F.one]
    for idx in range(F.q**n):
        coeffs = []
        t = idx
        for _ in range(n):
            coeffs.append(_int_to_el(F, t % F.q))
            t //= F.q
        f = coeffs + [F.one]
        if fq_is_irreducible(F, f):
            return f
    raise ArithmeticError("no irreducible found")


def gl_generators(F, n):
    """Generators of GL_n(F), at most three matrices.

    For n = 1 a single multiplicative generator. For n >= 2 the set
    {diag(w,1,...,1), cycle, I + E_12} with w a generator of F^x: the
    diagonal conjugates of the transvection give the whole root subgroup
    (every c in F^x is a power of w, sums of powers cover F), the cycle's
    conjugates and commutators then give all transvections, hence SL_n,
    and det(diag) = w covers GL_n / SL_n. The classical Singer-cycle plus
    transvection pair is NOT used: for GL_2(F_4) that pair generates only
    the 30-element normalizer of the Singer torus.
    """
    if n == 1:
        return [[[F.generator()]]]
    out = []
    w = F.generator()
    if w != F.one:
        D = ff_identity(F, n)
        D[0][0] = w
        out.append(D)
    P = [[F.one if j == (i + 1) % n else F.zero for j in range(n)] for i in range(n)]
    out.append(P)
    T = ff_identity(F, n)
    T[0][1] = F.one
    out.append(T)
    return out
