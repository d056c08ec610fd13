import random

import sympy
from sympy.matrices.normalforms import invariant_factors as sympy_invfac

from zsimilar import intlinalg as la
from zsimilar import rcf
from zsimilar.polys import deg, pmul, trim

x = sympy.symbols("x")


def rand_unimodular(rng, n, steps=12):
    U = la.identity_mat(n)
    for _ in range(steps):
        if n < 2:
            break
        i, j = rng.sample(range(n), 2)
        c = rng.randint(-2, 2)
        for k in range(n):
            U[i][k] += c * U[j][k]
    return U


def conjugate(A, U):
    """U A U^{-1} for unimodular U, exact and cast back to int."""
    P = la.mat_mul_frac(la.mat_mul_frac(U, A), la.inv_frac(U))
    return la.int_mat_from_frac(P)


def oracle_invariant_factors(B):
    n = len(B)
    M = sympy.eye(n) * x - sympy.Matrix(B)
    out = []
    for f in sympy_invfac(M, domain=sympy.QQ[x]):
        p = sympy.Poly(f, x)
        if p.degree() >= 1:
            monic = sympy.Poly(p / p.LC(), x)
            out.append([int(c) for c in reversed(monic.all_coeffs())])
    return out


def block_diag(*blocks):
    n = sum(len(b) for b in blocks)
    M = [[0] * n for _ in range(n)]
    off = 0
    for b in blocks:
        for i in range(len(b)):
            for j in range(len(b)):
                M[off + i][off + j] = b[i][j]
        off += len(b)
    return M


def test_invariant_factors_against_sympy():
    rng = random.Random(17)
    for _ in range(40):
        n = rng.randint(1, 6)
        B = [[rng.randint(-3, 3) for _ in range(n)] for _ in range(n)]
        ours = rcf.invariant_factors(B)
        theirs = oracle_invariant_factors(B)
        assert ours == theirs


def test_invariant_factors_derogatory():
    rng = random.Random(23)
    # force repeated structure: conjugated block diagonals with shared factors
    for _ in range(30):
        f = [rng.randint(-3, 3), 1]  # linear
        e1, e2 = rng.choice([(1, 1), (2, 1), (2, 2), (3, 1)])
        g1 = [1]
        for _ in range(e1):
            g1 = pmul(g1, f)
        g2 = [1]
        for _ in range(e2):
            g2 = pmul(g2, f)
        B0 = block_diag(rcf.companion_block(g1), rcf.companion_block(g2))
        U = rand_unimodular(rng, len(B0))
        B = conjugate(B0, U)
        assert rcf.invariant_factors(B) == oracle_invariant_factors(B)
        eds = rcf.elementary_divisors(B)
        assert eds == sorted([(tuple(f), e1), (tuple(f), e2)])


def test_decomposition_towers_certify():
    rng = random.Random(5)
    for _ in range(30):
        n = rng.randint(1, 6)
        B = [[rng.randint(-3, 3) for _ in range(n)] for _ in range(n)]
        comps = rcf.primary_cyclic_decomposition(B)
        total = 0
        for f, towers in comps:
            d = deg(f)
            last = None
            for e, v in towers:
                assert any(v)
                if last is not None:
                    assert e <= last
                last = e
                total += d * e
                # v generates a summand with annihilator exactly f^e
                N = rcf.mat_poly(f, B)
                Nk = la.identity_mat(n)
                for _ in range(e - 1):
                    Nk = la.mat_mul(Nk, N)
                w = la.mat_vec(Nk, v)
                assert any(w)  # f^{e-1} v != 0
                assert not any(la.mat_vec(la.mat_mul(Nk, N), v))  # f^e v = 0
        assert total == n


def test_rcf_form():
    # companion of x^2+5336100, three towers
    f = [5336100, 0, 1]
    C = rcf.companion_block(f)
    assert C == [[0, 1], [-5336100, 0]]
    B0 = block_diag(C, C, C)
    rng = random.Random(9)
    B = conjugate(B0, rand_unimodular(rng, 6))
    R, T = rcf.rational_canonical_form(B)
    assert R == B0
    # T integer, invertible, T^{-1} B T = R
    assert abs(la.det_int(T)) >= 1
    Tinv = la.inv_frac(T)
    got = la.mat_mul_frac(Tinv, la.mat_mul_frac(B, T))
    assert got == R


def test_rcf_canonical_across_conjugates():
    rng = random.Random(31)
    for _ in range(20):
        n = rng.randint(2, 5)
        A = [[rng.randint(-3, 3) for _ in range(n)] for _ in range(n)]
        B = conjugate(A, rand_unimodular(rng, n))
        RA, _ = rcf.rational_canonical_form(A)
        RB, _ = rcf.rational_canonical_form(B)
        assert RA == RB


def test_similar_over_q_positive():
    rng = random.Random(41)
    for _ in range(25):
        n = rng.randint(1, 5)
        A = [[rng.randint(-3, 3) for _ in range(n)] for _ in range(n)]
        B = conjugate(A, rand_unimodular(rng, n))
        got = rcf.similar_over_q(A, B)
        assert got is not None
        D, Dinv = got
        assert la.mat_mul_frac(D, Dinv) == la.identity_mat(n)
        assert la.mat_mul_frac(D, A) == la.mat_mul_frac(B, D)


def test_similar_over_q_negative():
    # same charpoly x^3, different module structure
    A = block_diag([[0]], [[0, 1], [0, 0]])
    B = [[0, 0, 0], [0, 0, 0], [0, 0, 0]]
    assert rcf.similar_over_q(A, B) is None
    # x^2 vs x*x
    A2 = [[0, 1], [0, 0]]
    B2 = [[0, 0], [0, 0]]
    assert rcf.similar_over_q(A2, B2) is None
    assert rcf.similar_over_q(A2, A2) is not None


def test_nilpotent_partitions():
    # partition (2,1): elementary divisors x^2, x
    B = block_diag([[0, 1], [0, 0]], [[0]])
    eds = rcf.elementary_divisors(B)
    assert eds == [((0, 1), 1), ((0, 1), 2)]
    invf = rcf.invariant_factors(B)
    assert invf == [[0, 1], [0, 0, 1]]
