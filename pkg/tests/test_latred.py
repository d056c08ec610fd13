import random
from fractions import Fraction

import pytest

from zsimilar.intlinalg import det_int, mat_mul_frac, transpose
from zsimilar.latred import (
    cholesky_q,
    gso,
    lll_reduce,
    minimal_vectors,
    qform_value,
    short_vectors,
)


def random_pd_gram(rng, n, spread=4):
    A = [[rng.randint(-spread, spread) for _ in range(n)] for _ in range(n)]
    G = [[sum(A[i][k] * A[j][k] for k in range(n)) for j in range(n)] for i in range(n)]
    for i in range(n):
        G[i][i] += n
    return G


def eval_via_cholesky(q, x):
    n = len(q)
    total = Fraction(0)
    for i in range(n):
        inner = x[i] + sum(q[i][j] * x[j] for j in range(i + 1, n))
        total += q[i][i] * inner * inner
    return total


def test_cholesky_reproduces_form():
    rng = random.Random(5)
    for _ in range(20):
        n = rng.randint(1, 5)
        G = random_pd_gram(rng, n)
        q = cholesky_q(G)
        for _ in range(10):
            x = [rng.randint(-4, 4) for _ in range(n)]
            assert eval_via_cholesky(q, x) == qform_value(G, x)


def test_cholesky_rejects_indefinite():
    with pytest.raises(ValueError):
        cholesky_q([[1, 2], [2, 1]])
    with pytest.raises(ValueError):
        gso([[0, 0], [0, 1]])


def brute_short(G, bound, radius):
    n = len(G)
    out = set()

    def rec(i, x):
        if i == n:
            v = qform_value(G, x)
            if 0 < v <= bound:
                y = list(x)
                last = next(c for c in reversed(y) if c)
                if last < 0:
                    y = [-c for c in y]
                out.add(tuple(y))
            return
        for c in range(-radius, radius + 1):
            rec(i + 1, x + [c])

    rec(0, [])
    return out


def test_enumeration_matches_brute_force():
    rng = random.Random(11)
    for _ in range(12):
        n = rng.randint(2, 4)
        G = random_pd_gram(rng, n, spread=2)
        bound = Fraction(3 * n)
        # G >= n*I so solutions satisfy |x_i|^2 <= bound/n
        radius = 4
        got = {vec for vec, _ in short_vectors(G, bound)}
        want = brute_short(G, bound, radius)
        assert got == want
        for vec, val in short_vectors(G, bound):
            assert val == qform_value(G, vec)


def test_enumeration_canonical_and_sorted():
    G = [[1, 0], [0, 1]]
    vs = short_vectors(G, 1)
    assert vs == [((0, 1), 1), ((1, 0), 1)]
    vs2 = short_vectors(G, 2)
    assert [v for v, _ in vs2] == [(0, 1), (1, 0), (-1, 1), (1, 1)]


def test_lll_properties():
    rng = random.Random(23)
    delta = Fraction(3, 4)
    for _ in range(15):
        n = rng.randint(2, 5)
        G = random_pd_gram(rng, n, spread=6)
        U, G2 = lll_reduce(G)
        assert abs(det_int(U)) == 1
        Uf = [[Fraction(c) for c in row] for row in U]
        Gf = [[Fraction(c) for c in row] for row in G]
        assert mat_mul_frac(mat_mul_frac(Uf, Gf), transpose(Uf)) == G2
        mu, B = gso(G2)
        for i in range(n):
            for j in range(i):
                assert abs(mu[i][j]) <= Fraction(1, 2)
        for k in range(1, n):
            assert B[k] >= (delta - mu[k][k - 1] ** 2) * B[k - 1]


def test_lll_first_vector_bound():
    rng = random.Random(31)
    for _ in range(10):
        n = rng.randint(2, 4)
        G = random_pd_gram(rng, n, spread=5)
        _, G2 = lll_reduce(G)
        d = det_int(G)
        # |b1|^2 <= 2^(n-1) det(L)^(2/n), raised to the n-th power
        assert Fraction(G2[0][0]) ** n <= Fraction(2) ** (n * (n - 1)) * d


def test_lll_finds_short_combination():
    K = 10**6
    G = [[1, K], [K, K * K + 1]]  # basis (1,0), (K,1)
    _, G2 = lll_reduce(G)
    assert min(G2[0][0], G2[1][1]) == 1


def test_minimal_vectors_identity():
    m, vecs = minimal_vectors([[1, 0, 0], [0, 1, 0], [0, 0, 1]])
    assert m == 1
    assert vecs == [(0, 0, 1), (0, 1, 0), (1, 0, 0)]


def test_minimal_vectors_skewed():
    # lattice basis rows (2,0),(1,3): Gram below; minimum is 4 at (2,0) = row1
    G = [[4, 2], [2, 10]]
    m, vecs = minimal_vectors(G)
    assert m == 4
    assert vecs == [(1, 0)]
