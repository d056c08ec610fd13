import random
from fractions import Fraction

import sympy
from sympy.matrices.normalforms import hermite_normal_form, smith_normal_form
from hypothesis import given, settings
from hypothesis import strategies as st

from zsimilar import intlinalg as la


def rand_mat(rng, m, n, lo=-9, hi=9):
    return [[rng.randint(lo, hi) for _ in range(n)] for _ in range(m)]


small_entries = st.integers(min_value=-30, max_value=30)


def mat_strategy(max_dim=5):
    return st.integers(min_value=1, max_value=max_dim).flatmap(
        lambda m: st.integers(min_value=1, max_value=max_dim).flatmap(
            lambda n: st.lists(
                st.lists(small_entries, min_size=n, max_size=n),
                min_size=m,
                max_size=m,
            )
        )
    )


def square_strategy(max_dim=5):
    return st.integers(min_value=1, max_value=max_dim).flatmap(
        lambda n: st.lists(
            st.lists(small_entries, min_size=n, max_size=n),
            min_size=n,
            max_size=n,
        )
    )


def test_xgcd():
    for a, b in [(0, 0), (0, 5), (5, 0), (12, 18), (-12, 18), (7, -3), (-4, -6)]:
        g, x, y = la.xgcd(a, b)
        assert g == x * a + y * b
        assert g >= 0
        if a or b:
            assert a % g == 0 and b % g == 0


@given(square_strategy(5))
@settings(max_examples=150, deadline=None)
def test_det_matches_sympy(A):
    assert la.det_int(A) == sympy.Matrix(A).det()


@given(mat_strategy(5))
@settings(max_examples=100, deadline=None)
def test_rank_matches_sympy(A):
    assert la.rank_int(A) == sympy.Matrix(A).rank()


def is_row_hnf(H):
    pivots = []
    for row in H:
        nz = [j for j, x in enumerate(row) if x]
        if not nz:
            return False
        c = nz[0]
        if pivots and c <= pivots[-1]:
            return False
        if row[c] <= 0:
            return False
        pivots.append(c)
    for t, c in enumerate(pivots):
        for s in range(t):
            if not (0 <= H[s][c] < H[t][c]):
                return False
    return True


@given(mat_strategy(5))
@settings(max_examples=150, deadline=None)
def test_hnf_shape_and_lattice(A):
    H = la.hnf(A)
    assert is_row_hnf(H)
    piv = la.hnf_pivots(H)
    for row in A:
        if any(row):
            assert la.hnf_contains(H, piv, row)
    # adding the generators back does not change the canonical form
    assert la.hnf(H + [list(r) for r in A]) == H


@given(mat_strategy(5))
@settings(max_examples=100, deadline=None)
def test_hnf_transform(A):
    H, U, r = la.hnf(A, transform=True)
    assert abs(la.det_int(U)) == 1
    UA = la.mat_mul(U, A)
    assert UA[:r] == H
    for row in UA[r:]:
        assert not any(row)


@given(square_strategy(5))
@settings(max_examples=100, deadline=None)
def test_hnf_lattice_agrees_with_general(A):
    assert la.hnf_lattice(A) == la.hnf(A)


def test_hnf_same_lattice_as_sympy():
    rng = random.Random(7)
    checked = 0
    for _ in range(60):
        n = rng.randint(1, 5)
        A = rand_mat(rng, n + rng.randint(0, 2), n)
        if la.rank_int(A) < n:
            continue
        # row lattice of A = transposed column lattice of A^T
        Hs = hermite_normal_form(sympy.Matrix(A).T)
        rows = [[int(x) for x in row] for row in Hs.T.tolist()]
        assert la.hnf_lattice(rows) == la.hnf_lattice(A)
        checked += 1
    assert checked > 20


def test_hnf_mod_det_path_exercised():
    rng = random.Random(11)
    hit = 0
    for _ in range(40):
        n = rng.randint(2, 5)
        A = rand_mat(rng, n, n)
        d = la.det_int(A)
        if d == 0 or abs(d) == 1:
            continue
        hit += 1
        assert la.hnf_lattice(A) == la.hnf(A)
    assert hit > 10


@given(mat_strategy(5))
@settings(max_examples=100, deadline=None)
def test_kernel_int(A):
    K = la.kernel_int(A)
    n = len(A[0])
    for v in K:
        assert all(sum(A[i][j] * v[j] for j in range(n)) == 0 for i in range(len(A)))
    assert len(K) == n - la.rank_int(A)
    if K:
        # saturated: all invariant factors of the kernel basis are 1
        assert la.snf_diagonal(K)[: len(K)] == [1] * len(K)


@given(mat_strategy(4), st.lists(st.integers(-5, 5), min_size=1, max_size=4))
@settings(max_examples=100, deadline=None)
def test_solve_int_right(A, x):
    n = len(A[0])
    x = (x * n)[:n]
    b = [sum(A[i][j] * x[j] for j in range(n)) for i in range(len(A))]
    sol = la.solve_int_right(A, b)
    assert sol is not None
    assert [sum(A[i][j] * sol[j] for j in range(n)) for i in range(len(A))] == b


def test_solve_int_no_solution():
    assert la.solve_int_right([[2, 0], [0, 2]], [1, 0]) is None
    assert la.solve_int_right([[2]], [3]) is None
    # inconsistent overdetermined system
    assert la.solve_int_right([[1], [0]], [0, 1]) is None


@given(mat_strategy(4))
@settings(max_examples=100, deadline=None)
def test_snf(A):
    D, U, V = la.snf_with_transform(A)
    assert abs(la.det_int(U)) == 1
    assert abs(la.det_int(V)) == 1
    assert la.mat_mul(la.mat_mul(U, A), V) == D
    for i in range(len(D)):
        for j in range(len(D[0])):
            if i != j:
                assert D[i][j] == 0
    diag = [D[i][i] for i in range(min(len(D), len(D[0])))]
    nz = [d for d in diag if d]
    for a, b in zip(nz, nz[1:]):
        assert b % a == 0
    assert all(d >= 0 for d in diag)
    assert len(nz) == sympy.Matrix(A).rank()


def test_snf_matches_sympy():
    rng = random.Random(3)
    for _ in range(40):
        m = rng.randint(1, 4)
        n = rng.randint(1, 4)
        A = rand_mat(rng, m, n)
        ours = [d for d in la.snf_diagonal(A) if d]
        M = sympy.Matrix(A)
        snf = smith_normal_form(M, domain=sympy.ZZ)
        theirs = [abs(int(x)) for x in snf.diagonal() if x]
        assert ours == theirs


@given(square_strategy(5))
@settings(max_examples=100, deadline=None)
def test_charpoly_matches_sympy(A):
    x = sympy.symbols("x")
    cp = sympy.Matrix(A).charpoly(x).all_coeffs()  # descending
    assert la.charpoly(A) == [int(c) for c in reversed(cp)]


@given(square_strategy(4))
@settings(max_examples=60, deadline=None)
def test_minpoly_certified(A):
    p = la.minpoly(A)
    assert p[-1] == 1
    # annihilates
    assert la.is_zero_mat(la.eval_poly_mat(p, A))
    # divides the characteristic polynomial exactly
    x = sympy.symbols("x")
    cp = sympy.Poly([int(c) for c in reversed(la.charpoly(A))], x)
    pp = sympy.Poly([sympy.Rational(c) for c in reversed(p)], x)
    q, r = sympy.div(cp, pp, x)
    assert r == 0
    # minimal: dropping any irreducible factor stops annihilating
    for fac, _ in sympy.factor_list(pp.as_expr(), x)[1]:
        quo = sympy.Poly(sympy.div(pp.as_expr(), fac, x)[0], x)
        coeffs = [Fraction(int(c.p), int(c.q)) for c in reversed(quo.all_coeffs())]
        assert not la.is_zero_mat(la.eval_poly_mat(coeffs, A))


def test_minpoly_known():
    # nilpotent block: minpoly x^2, charpoly x^3
    N = [[0, 1, 0], [0, 0, 0], [0, 0, 0]]
    assert la.minpoly(N) == [0, 0, 1]
    assert la.minpoly([[1, 0], [0, 1]]) == [-1, 1]
    assert la.minpoly([[0, 1], [-1, 0]]) == [1, 0, 1]


def test_lattice_ops():
    H1 = la.hnf_lattice([[2, 0], [0, 3]])
    H2 = la.hnf_lattice([[3, 0], [0, 2]])
    s = la.lattice_sum(H1, H2)
    assert s == [[1, 0], [0, 1]]
    i = la.lattice_intersect(H1, H2)
    assert i == [[6, 0], [0, 6]]
    assert la.lattice_index(s, i) == 36


@given(st.integers(1, 4), st.data())
@settings(max_examples=60, deadline=None)
def test_lattice_modularity(n, data):
    rowstrat = st.lists(st.lists(small_entries, min_size=n, max_size=n), min_size=n, max_size=n)
    A = data.draw(rowstrat)
    B = data.draw(rowstrat)
    HA = la.hnf_lattice(A)
    HB = la.hnf_lattice(B)
    if not HA or not HB:
        return
    S = la.lattice_sum(HA, HB)
    I = la.lattice_intersect(HA, HB)
    pa = la.hnf_pivots(HA)
    pb = la.hnf_pivots(HB)
    for v in I:
        assert la.hnf_contains(HA, pa, v)
        assert la.hnf_contains(HB, pb, v)
    ps = la.hnf_pivots(S)
    for v in HA + HB:
        assert la.hnf_contains(S, ps, v)
    if len(HA) == len(HB) == len(S) == len(I):
        assert la.lattice_index(S, HA) * la.lattice_index(S, HB) == la.lattice_index(S, I)


def test_saturate():
    assert la.saturate_rows([[2, 0], [0, 4]]) == [[1, 0], [0, 1]]
    assert la.saturate_rows([[2, 4]]) == [[1, 2]]
    assert la.saturate_rows([[2, 2, 0], [0, 0, 3]]) == [[1, 1, 0], [0, 0, 1]]


def test_frac_solvers():
    A = [[2, 1], [1, 1]]
    inv = la.inv_frac(A)
    assert la.mat_mul_frac(A, inv) == [[1, 0], [0, 1]]
    x = la.solve_frac_right([[2, 0], [0, 4]], [1, 2])
    assert x == [Fraction(1, 2), Fraction(1, 2)]
    assert la.solve_frac_right([[1, 1], [1, 1]], [0, 1]) is None
    assert la.det_frac([[Fraction(1, 2), 0], [0, 4]]) == 2


def test_nullspace_frac():
    A = [[1, 2, 3], [2, 4, 6]]
    N = la.nullspace_frac(A)
    assert len(N) == 2
    for v in N:
        assert all(sum(Fraction(A[i][j]) * v[j] for j in range(3)) == 0 for i in range(2))


def test_clear_denominators():
    rows = [[Fraction(1, 2), Fraction(1, 3)], [Fraction(1, 6), 1]]
    out, den = la.clear_denominators(rows)
    assert den == 6
    assert out == [[3, 2], [1, 6]]
