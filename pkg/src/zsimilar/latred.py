"""Lattice reduction and exact short-vector enumeration.

Everything operates on Gram matrices with Fraction entries: callers pick
the quadratic form (typically a rational minorant of the T2 form coming
from interval embeddings) and keep full rigor, since enumeration below a
rational bound is exhaustive for the given form. Transformations are
tracked as unimodular integer row operations.
"""

from fractions import Fraction
from math import floor

from zsimilar.intervals import sqrt_frac_up


def _frac_mat(G):
    return [[Fraction(x) for x in row] for row in G]


def gso(G):
    """Gram-Schmidt coefficients mu and squared norms B from a Gram matrix."""
    n = len(G)
    mu = [[Fraction(0)] * n for _ in range(n)]
    r = [[Fraction(0)] * n for _ in range(n)]
    B = [Fraction(0)] * n
    for i in range(n):
        for j in range(i + 1):
            s = Fraction(G[i][j])
            for k in range(j):
                s -= mu[j][k] * r[i][k]
            r[i][j] = s
            if j < i:
                mu[i][j] = s / B[j]
        B[i] = r[i][i]
        mu[i][i] = Fraction(1)
        if B[i] <= 0:
            raise ValueError("Gram matrix not positive definite")
    return mu, B


def _row_op(G, U, k, j, q):
    """b_k -= q*b_j, applied to the Gram matrix and the transform."""
    n = len(G)
    for t in range(n):
        U[k][t] -= q * U[j][t]
    for t in range(n):
        G[k][t] -= q * G[j][t]
    for t in range(n):
        G[t][k] -= q * G[t][j]


def _row_swap(G, U, k, j):
    U[k], U[j] = U[j], U[k]
    G[k], G[j] = G[j], G[k]
    for row in G:
        row[k], row[j] = row[j], row[k]


def lll_reduce(G, delta=Fraction(3, 4)):
    """LLL-reduce the lattice with Gram matrix G.

    Returns (U, G2) with U unimodular and G2 = U G U^T the Gram matrix of
    the reduced basis. Exact rational arithmetic throughout; the GSO is
    recomputed after each modification, which is fine at the dimensions
    this package meets (degree <= 8 fields, a handful of ideal columns).
    """
    G = _frac_mat(G)
    n = len(G)
    U = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    if n <= 1:
        gso(G)
        return U, G
    k = 1
    while k < n:
        mu, B = gso(G)
        for j in range(k - 1, -1, -1):
            q = floor(mu[k][j] + Fraction(1, 2))
            if q:
                _row_op(G, U, k, j, q)
                mu, B = gso(G)
        if B[k] >= (delta - mu[k][k - 1] * mu[k][k - 1]) * B[k - 1]:
            k += 1
        else:
            _row_swap(G, U, k, k - 1)
            k = max(k - 1, 1)
    return U, G


def cholesky_q(G):
    """Fincke-Pohst coefficients: Q(x) = sum_i q[i][i]*(x_i + sum_{j>i} q[i][j]x_j)^2."""
    q = _frac_mat(G)
    n = len(q)
    for i in range(n):
        if q[i][i] <= 0:
            raise ValueError("Gram matrix not positive definite")
        for j in range(i + 1, n):
            q[j][i] = q[i][j]
            q[i][j] = q[i][j] / q[i][i]
        for k in range(i + 1, n):
            for l in range(k, n):
                q[k][l] -= q[k][i] * q[i][l]
    return q


def qform_value(G, x):
    n = len(G)
    return sum(Fraction(G[i][j]) * x[i] * x[j] for i in range(n) for j in range(n))


def short_vectors(G, bound):
    """All nonzero x in Z^n with x G x^T <= bound, one per +-pair.

    The canonical representative has its last nonzero coordinate positive.
    Returns a list of (vector, value) sorted by (value, vector); the
    square-root bounds used for coordinate ranges only ever overshoot, and
    every candidate is checked by exact evaluation, so the enumeration is
    exhaustive for the given rational form.
    """
    n = len(G)
    q = cholesky_q(G)
    bound = Fraction(bound)
    if bound < 0:
        return []
    out = []
    x = [0] * n

    def rec(i, rem, only_nonneg):
        if i < 0:
            val = bound - rem
            if val > 0:
                out.append((tuple(x), val))
            return
        u = sum(q[i][j] * x[j] for j in range(i + 1, n))
        z = sqrt_frac_up(rem / q[i][i], 16)
        xmin = -floor(z + u)
        xmax = floor(z - u)
        start = max(xmin, 0) if only_nonneg else xmin
        for xi in range(start, xmax + 1):
            t = q[i][i] * (xi + u) * (xi + u)
            if t > rem:
                continue
            x[i] = xi
            rec(i - 1, rem - t, only_nonneg and xi == 0)
        x[i] = 0

    rec(n - 1, bound, True)
    out.sort(key=lambda p: (p[1], p[0]))
    return out


def minimal_vectors(G):
    """Shortest nonzero vectors of the form, via LLL then enumeration."""
    U, G2 = lll_reduce(G)
    b = min(G2[i][i] for i in range(len(G2)))
    found = short_vectors(G2, b)
    m = min(v for _, v in found)
    n = len(G2)
    out = []
    for vec, v in found:
        if v == m:
            orig = [sum(vec[i] * U[i][t] for i in range(n)) for t in range(n)]
            last = next(c for c in reversed(orig) if c)
            if last < 0:
                orig = [-c for c in orig]
            out.append(tuple(orig))
    return m, sorted(out)
