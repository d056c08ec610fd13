"""Exact linear algebra over Z and Q.

Integer matrices are lists of row lists of Python ints; rational
matrices use fractions.Fraction entries. Row convention throughout:
a lattice is the set of integer combinations of the rows of its basis
matrix, and Hermite forms are row-style (pivots positive, entries above
a pivot reduced into [0, pivot), pivot columns strictly increasing).
"""

from fractions import Fraction
from math import gcd

from zsimilar.kernels import mat_mul_int, row_addmul, row_mod


def xgcd(a, b):
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


# ---------------------------------------------------------------------------
# basic matrix helpers


def identity_mat(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def zero_mat(m, n):
    return [[0] * n for _ in range(m)]


def mat_copy(A):
    return [row[:] for row in A]


def transpose(A):
    return [list(col) for col in zip(*A)] if A else []


mat_mul = mat_mul_int


def mat_add(A, B):
    return [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(A, B)]


def mat_sub(A, B):
    return [[a - b for a, b in zip(ra, rb)] for ra, rb in zip(A, B)]


def mat_scal(c, A):
    return [[c * a for a in row] for row in A]


def mat_vec(A, v):
    return [sum(a * x for a, x in zip(row, v)) for row in A]


def vec_mat(v, A):
    n = len(A[0]) if A else 0
    out = [0] * n
    for c, row in zip(v, A):
        if c:
            for j, a in enumerate(row):
                if a:
                    out[j] += c * a
    return out


def is_zero_mat(A):
    return all(not x for row in A for x in row)


# ---------------------------------------------------------------------------
# determinant and rank (fraction-free Bareiss)


def bareiss(A):
    """Fraction-free elimination.

    Returns (rank, det, pivot_rows, pivot_cols) where det is the exact
    determinant of the submatrix on pivot_rows x pivot_cols taken in
    sorted row order.
    """
    M = mat_copy(A)
    m = len(M)
    n = len(M[0]) if M else 0
    prev = 1
    pivot_rows = []
    pivot_cols = []
    rows_left = list(range(m))
    col = 0
    while col < n and rows_left:
        piv = None
        best = None
        for i in rows_left:
            v = M[i][col]
            if v and (best is None or abs(v) < best):
                best = abs(v)
                piv = i
        if piv is None:
            col += 1
            continue
        pivot_rows.append(piv)
        pivot_cols.append(col)
        rows_left = [i for i in rows_left if i != piv]
        pv = M[piv][col]
        Mp = M[piv]
        for i in rows_left:
            riv = M[i][col]
            Mi = M[i]
            for j in range(col + 1, n):
                Mi[j] = (pv * Mi[j] - riv * Mp[j]) // prev
            Mi[col] = 0
        prev = pv
        col += 1
    rank = len(pivot_rows)
    det = prev if rank else 1
    # sign of the permutation sorting the selected rows
    perm = sorted(range(rank), key=lambda t: pivot_rows[t])
    sign = 1
    seen = [False] * rank
    for t in range(rank):
        if seen[t]:
            continue
        ln = 0
        u = t
        while not seen[u]:
            seen[u] = True
            u = perm[u]
            ln += 1
        if ln % 2 == 0:
            sign = -sign
    return rank, sign * det, pivot_rows, pivot_cols


def det_int(A):
    n = len(A)
    if n == 0:
        return 1
    rank, det, _, _ = bareiss(A)
    return det if rank == n else 0


def rank_int(A):
    return bareiss(A)[0]


# ---------------------------------------------------------------------------
# Hermite normal form


def hnf(mat, transform=False):
    """Row-style HNF of the lattice spanned by the rows of mat.

    Returns H (zero rows dropped). With transform=True returns (H, U, r)
    where U is unimodular, U*mat = [H; 0] and r = len(H); the rows of U
    below r span the left kernel of mat.
    """
    if not mat:
        return ([], [], 0) if transform else []
    m = len(mat)
    n = len(mat[0])
    rows = [list(r) for r in mat]
    U = identity_mat(m) if transform else None
    order = []
    pool = list(range(m))
    for col in range(n):
        live = [i for i in pool if rows[i][col]]
        if not live:
            continue
        while len(live) > 1:
            live.sort(key=lambda i: abs(rows[i][col]))
            p = live[0]
            pv = rows[p][col]
            rest = []
            for i in live[1:]:
                q = rows[i][col] // pv
                if q:
                    row_addmul(rows[i], rows[p], -q, col)
                    if transform:
                        row_addmul(U[i], U[p], -q, 0)
                if rows[i][col]:
                    rest.append(i)
            live = [p] + rest
        p = live[0]
        if rows[p][col] < 0:
            rows[p] = [-x for x in rows[p]]
            if transform:
                U[p] = [-x for x in U[p]]
        order.append(p)
        pool = [i for i in pool if i != p]
    # reduce entries above pivots, left to right so settled columns stay put
    pivcols = [next(j for j in range(n) if rows[p][j]) for p in order]
    for t in range(1, len(order)):
        p = order[t]
        c = pivcols[t]
        pv = rows[p][c]
        for s in range(t):
            i = order[s]
            q = rows[i][c] // pv
            if q:
                row_addmul(rows[i], rows[p], -q, c)
                if transform:
                    row_addmul(U[i], U[p], -q, 0)
    H = [rows[i] for i in order]
    if not transform:
        return H
    Uout = [U[i] for i in order] + [U[i] for i in pool]
    return H, Uout, len(order)


def hnf_mod_det(mat, n, d):
    """HNF of the row lattice of mat, given full column rank n and d > 0
    with d*Z^n inside the lattice. All entries stay bounded by d."""
    rows = [list(r) for r in mat]
    for r in rows:
        row_mod(r, d, 0)
    for j in range(n):
        e = [0] * n
        e[j] = d
        rows.append(e)
    rows = [r for r in rows if any(r)]
    out = []
    for col in range(n):
        live = [i for i in range(len(rows)) if rows[i][col]]
        if not live:
            raise ArithmeticError("modular HNF lost full rank")
        while len(live) > 1:
            live.sort(key=lambda i: abs(rows[i][col]))
            p = live[0]
            pv = rows[p][col]
            nxt = []
            for i in live[1:]:
                q = rows[i][col] // pv
                row_addmul(rows[i], rows[p], -q, col)
                row_mod(rows[i], d, col)
                if rows[i][col]:
                    nxt.append(i)
            live = [p] + nxt
        p = live[0]
        if rows[p][col] < 0:
            rows[p] = [-x for x in rows[p]]
        row_mod(rows[p], d, col + 1)
        out.append(rows[p])
        rows = [rows[i] for i in range(len(rows)) if i != p and any(rows[i][col + 1 :])]
    for t in range(1, n):
        pv = out[t][t]
        for s in range(t):
            q = out[s][t] // pv
            if q:
                row_addmul(out[s], out[t], -q, t)
    return out


def hnf_lattice(mat):
    """HNF basis of the row lattice; modular fast path at full column rank."""
    mat = [r for r in mat if any(r)]
    if not mat:
        return []
    n = len(mat[0])
    rank, det, _, _ = bareiss(mat)
    if rank == n:
        d = abs(det)
        if d == 1:
            return identity_mat(n)
        return hnf_mod_det(mat, n, d)
    return hnf(mat)


def hnf_pivots(H):
    return [next(j for j, x in enumerate(row) if x) for row in H]


def hnf_reduce_vector(H, pivots, v):
    """Reduce v modulo the row lattice of H (HNF). Returns (residue, coeffs)."""
    v = list(v)
    coeffs = []
    for row, c in zip(H, pivots):
        q = v[c] // row[c]
        coeffs.append(q)
        if q:
            row_addmul(v, row, -q, c)
    return v, coeffs


def hnf_contains(H, pivots, v):
    r, _ = hnf_reduce_vector(H, pivots, v)
    return not any(r)


def lattice_contains(H, v):
    return hnf_contains(H, hnf_pivots(H), v)


def lattice_sum(H1, H2):
    return hnf_lattice(list(H1) + list(H2))


def lattice_intersect(H1, H2):
    """Intersection of two row lattices in the same ambient Z^n."""
    if not H1 or not H2:
        return []
    stack = [list(r) for r in H1] + [list(r) for r in H2]
    ker = left_kernel_int(stack)
    k1 = len(H1)
    gens = [vec_mat(w[:k1], H1) for w in ker]
    gens = [g for g in gens if any(g)]
    return hnf_lattice(gens) if gens else []


def lattice_index(Hbig, Hsmall):
    """[L : M] for lattices given by their HNF bases, M inside L, equal rank."""
    pb = 1
    for row, c in zip(Hbig, hnf_pivots(Hbig)):
        pb *= row[c]
    ps = 1
    for row, c in zip(Hsmall, hnf_pivots(Hsmall)):
        ps *= row[c]
    q, r = divmod(ps, pb)
    if r:
        raise ValueError("index is not integral, not a sublattice")
    return q


# ---------------------------------------------------------------------------
# kernels, solving, saturation


def left_kernel_int(A):
    """Saturated basis of {x : x*A = 0} (row vectors)."""
    H, U, r = hnf(A, transform=True)
    return [U[i] for i in range(r, len(U))]


def kernel_int(A):
    """Saturated basis of {x : A*x = 0}, returned as row vectors."""
    return left_kernel_int(transpose(A))


def saturate_rows(mat):
    """Saturation (Q-span intersected with Z^n) of the row lattice."""
    mat = [r for r in mat if any(r)]
    if not mat:
        return []
    orth = kernel_int(mat)
    if not orth:
        return identity_mat(len(mat[0]))
    return hnf(kernel_int(orth))


def solve_int_right(A, b):
    """One integer solution x of A*x = b, or None."""
    At = transpose(A)
    H, U, r = hnf(At, transform=True)
    v = list(b)
    pivots = hnf_pivots(H)
    coeff = [0] * r
    for t, (row, c) in enumerate(zip(H, pivots)):
        if v[c] % row[c]:
            return None
        q = v[c] // row[c]
        coeff[t] = q
        if q:
            row_addmul(v, row, -q, c)
    if any(v):
        return None
    x = [0] * len(At)
    for t in range(r):
        if coeff[t]:
            row_addmul(x, U[t], coeff[t], 0)
    return x


def solve_int_left(A, b):
    """One integer solution x of x*A = b, or None."""
    return solve_int_right(transpose(A), b)


# ---------------------------------------------------------------------------
# Smith normal form


def snf_with_transform(A):
    """U*A*V = D with U, V unimodular, D diagonal, d_i | d_{i+1}, d_i >= 0."""
    m = len(A)
    n = len(A[0]) if A else 0
    M = mat_copy(A)
    U = identity_mat(m)
    V = identity_mat(n)

    def col_addmul(j, k, c):
        for i in range(m):
            M[i][j] += c * M[i][k]
        for i in range(n):
            V[i][j] += c * V[i][k]

    def col_swap(j, k):
        for i in range(m):
            M[i][j], M[i][k] = M[i][k], M[i][j]
        for i in range(n):
            V[i][j], V[i][k] = V[i][k], V[i][j]

    t = 0
    while t < min(m, n):
        piv = None
        best = None
        for i in range(t, m):
            for j in range(t, n):
                v = M[i][j]
                if v and (best is None or abs(v) < best):
                    best = abs(v)
                    piv = (i, j)
        if piv is None:
            break
        i0, j0 = piv
        if i0 != t:
            M[t], M[i0] = M[i0], M[t]
            U[t], U[i0] = U[i0], U[t]
        if j0 != t:
            col_swap(t, j0)
        while True:
            done = True
            for i in range(t + 1, m):
                if M[i][t]:
                    q = M[i][t] // M[t][t]
                    row_addmul(M[i], M[t], -q, 0)
                    row_addmul(U[i], U[t], -q, 0)
                    if M[i][t]:
                        M[t], M[i] = M[i], M[t]
                        U[t], U[i] = U[i], U[t]
                        done = False
            for j in range(t + 1, n):
                if M[t][j]:
                    q = M[t][j] // M[t][t]
                    col_addmul(j, t, -q)
                    if M[t][j]:
                        col_swap(t, j)
                        done = False
            if done:
                break
        if M[t][t] < 0:
            M[t] = [-x for x in M[t]]
            U[t] = [-x for x in U[t]]
        t += 1
    r = t
    changed = True
    while changed:
        changed = False
        for t in range(r - 1):
            a, b = M[t][t], M[t + 1][t + 1]
            if b % a:
                changed = True
                # 2x2 step: diag(a, b) -> diag(gcd, lcm)
                row_addmul(M[t], M[t + 1], 1, 0)
                row_addmul(U[t], U[t + 1], 1, 0)
                g, x2, y2 = xgcd(a, b)
                u1, u2 = a // g, b // g
                for i in range(m):
                    ci, cj = M[i][t], M[i][t + 1]
                    M[i][t] = x2 * ci + y2 * cj
                    M[i][t + 1] = -u2 * ci + u1 * cj
                for i in range(n):
                    ci, cj = V[i][t], V[i][t + 1]
                    V[i][t] = x2 * ci + y2 * cj
                    V[i][t + 1] = -u2 * ci + u1 * cj
                if M[t + 1][t]:
                    q = M[t + 1][t] // M[t][t]
                    row_addmul(M[t + 1], M[t], -q, 0)
                    row_addmul(U[t + 1], U[t], -q, 0)
                if M[t][t] < 0:
                    M[t] = [-v for v in M[t]]
                    U[t] = [-v for v in U[t]]
                if M[t + 1][t + 1] < 0:
                    M[t + 1] = [-v for v in M[t + 1]]
                    U[t + 1] = [-v for v in U[t + 1]]
    return M, U, V


def snf_diagonal(A):
    D, _, _ = snf_with_transform(A)
    return [D[i][i] for i in range(min(len(D), len(D[0]) if D else 0))]


# ---------------------------------------------------------------------------
# rational elimination


def rref_frac(A):
    """Reduced row echelon form over Q. Returns (R, pivot_cols)."""
    R = [[Fraction(x) for x in row] for row in A]
    m = len(R)
    n = len(R[0]) if R else 0
    pivots = []
    r = 0
    for c in range(n):
        piv = None
        for i in range(r, m):
            if R[i][c]:
                piv = i
                break
        if piv is None:
            continue
        R[r], R[piv] = R[piv], R[r]
        pv = R[r][c]
        R[r] = [x / pv for x in R[r]]
        for i in range(m):
            if i != r and R[i][c]:
                f = R[i][c]
                R[i] = [x - f * y for x, y in zip(R[i], R[r])]
        pivots.append(c)
        r += 1
        if r == m:
            break
    return R, pivots


def nullspace_frac(A):
    """Basis of the right kernel over Q (list of Fraction vectors)."""
    if not A:
        return []
    n = len(A[0])
    R, pivots = rref_frac(A)
    free = [j for j in range(n) if j not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * n
        v[f] = Fraction(1)
        for i, c in enumerate(pivots):
            v[c] = -R[i][f]
        basis.append(v)
    return basis


def kernel_int_sat(A):
    """Saturated integer basis of the right kernel of a rational matrix."""
    if not A:
        return []
    den = 1
    for row in A:
        for x in row:
            if isinstance(x, Fraction):
                den = den * x.denominator // gcd(den, x.denominator)
    Ai = [[int(x * den) for x in row] for row in A]
    return kernel_int(Ai)


def solve_frac_right(A, b):
    """Rational solution x of A*x = b, or None."""
    m = len(A)
    n = len(A[0]) if A else 0
    aug = [[Fraction(A[i][j]) for j in range(n)] + [Fraction(b[i])] for i in range(m)]
    R, pivots = rref_frac(aug)
    if n in pivots:
        return None
    x = [Fraction(0)] * n
    for i, c in enumerate(pivots):
        x[c] = R[i][n]
    return x


def inv_frac(A):
    n = len(A)
    aug = [
        [Fraction(A[i][j]) for j in range(n)]
        + [Fraction(1 if i == j else 0) for j in range(n)]
        for i in range(n)
    ]
    R, pivots = rref_frac(aug)
    if pivots != list(range(n)):
        raise ZeroDivisionError("matrix not invertible")
    return [row[n:] for row in R]


def mat_mul_frac(A, B):
    if not A:
        return []
    n = len(B[0]) if B else 0
    Bc = [[row[j] for row in B] for j in range(n)]
    return [[sum(a * b for a, b in zip(Ar, Bc[j])) for j in range(n)] for Ar in A]


def mat_vec_frac(A, v):
    return [sum(a * x for a, x in zip(row, v)) for row in A]


def det_frac(A):
    n = len(A)
    if n == 0:
        return Fraction(1)
    M = [[Fraction(x) for x in row] for row in A]
    det = Fraction(1)
    for c in range(n):
        piv = None
        for i in range(c, n):
            if M[i][c]:
                piv = i
                break
        if piv is None:
            return Fraction(0)
        if piv != c:
            M[c], M[piv] = M[piv], M[c]
            det = -det
        det *= M[c][c]
        pv = M[c][c]
        for i in range(c + 1, n):
            if M[i][c]:
                f = M[i][c] / pv
                M[i] = [x - f * y for x, y in zip(M[i], M[c])]
    return det


def clear_denominators(rows):
    """Scale rational rows to a common integer matrix. Returns (rows, den)."""
    den = 1
    for row in rows:
        for x in row:
            d = x.denominator if isinstance(x, Fraction) else 1
            den = den * d // gcd(den, d)
    out = [[int(x * den) for x in row] for row in rows]
    return out, den


def int_mat_from_frac(A):
    """Cast a Fraction matrix known to be integral back to ints."""
    out = []
    for row in A:
        r = []
        for x in row:
            if isinstance(x, Fraction):
                if x.denominator != 1:
                    raise ValueError("matrix entry is not an integer")
                r.append(int(x))
            else:
                r.append(x)
        out.append(r)
    return out


# ---------------------------------------------------------------------------
# characteristic and minimal polynomial


def charpoly(A):
    """Coefficients of det(x*I - A), ascending degree; integer exact for
    integer input (Berkowitz, division free)."""
    n = len(A)
    if n == 0:
        return [1]
    poly = [1]  # descending-degree vector, charpoly of the empty matrix
    for k in range(1, n + 1):
        a = A[k - 1][k - 1]
        R = A[k - 1][: k - 1]
        Cc = [A[i][k - 1] for i in range(k - 1)]
        M = [row[: k - 1] for row in A[: k - 1]]
        t = [1, -a]
        w = Cc
        for _ in range(k - 1):
            t.append(-sum(r * x for r, x in zip(R, w)))
            w = mat_vec(M, w)
        new = [0] * (k + 1)
        for i, pi in enumerate(poly):
            if pi:
                for j, tj in enumerate(t):
                    if i + j <= k and tj:
                        new[i + j] += pi * tj
        poly = new
    return list(reversed(poly))


def minpoly(A):
    """Monic minimal polynomial, ascending coefficients; plain ints when
    the input is integral."""
    n = len(A)
    Af = [[Fraction(x) for x in row] for row in A]
    curf = [[Fraction(1 if i == j else 0) for j in range(n)] for i in range(n)]
    basis = []
    piv_of_row = []
    powers = []
    while True:
        v = [curf[i][j] for i in range(n) for j in range(n)]
        powers.append(v)
        vv = list(v)
        for brow, bp in zip(basis, piv_of_row):
            if vv[bp]:
                f = vv[bp]
                vv = [x - f * y for x, y in zip(vv, brow)]
        nz = next((j for j, x in enumerate(vv) if x), None)
        if nz is None:
            k = len(powers) - 1
            mat = [[powers[i][j] for i in range(k)] for j in range(n * n)]
            sol = solve_frac_right(mat, v)
            out = [-c for c in sol] + [Fraction(1)]
            if all(c.denominator == 1 for c in out):
                return [int(c) for c in out]
            return out
        pv = vv[nz]
        vv = [x / pv for x in vv]
        basis.append(vv)
        piv_of_row.append(nz)
        curf = mat_mul_frac(curf, Af)


def eval_poly_mat(coeffs, A):
    """p(A) by Horner for ascending coefficients."""
    n = len(A)
    frac = any(isinstance(c, Fraction) for c in coeffs) or any(
        isinstance(x, Fraction) for row in A for x in row
    )
    mul = mat_mul_frac if frac else mat_mul
    out = [[coeffs[-1] if i == j else 0 for j in range(n)] for i in range(n)]
    for c in reversed(coeffs[:-1]):
        out = mul(out, A)
        for i in range(n):
            out[i][i] += c
    return out
