"""Structure of Q^n as a Q[x]-module under a square integer matrix.

The action is x*v = B*v on column vectors. The decomposition splits
Q^n into cyclic summands Q[x]/(f^e) with f irreducible; everything
downstream (canonical form, Q-similarity transforms, the split algebra
attached to a centralizer) is built from the towers found here.
"""

from zsimilar.intlinalg import (
    charpoly,
    clear_denominators,
    det_int,
    hnf_lattice,
    identity_mat,
    int_mat_from_frac,
    inv_frac,
    kernel_int,
    lattice_intersect,
    mat_mul,
    mat_mul_frac,
    mat_vec,
    rank_int,
    saturate_rows,
    solve_frac_right,
    transpose,
)
from zsimilar.polys import deg, factor_poly_q, pmul


def mat_poly(f, B):
    """f(B) for an ascending integer coefficient list (Horner)."""
    n = len(B)
    out = [[f[-1] if i == j else 0 for j in range(n)] for i in range(n)]
    for c in reversed(f[:-1]):
        out = mat_mul(out, B)
        for i in range(n):
            out[i][i] += c
    return out


def primary_cyclic_decomposition(B):
    """Split Q^n into cyclic summands under v -> B*v.

    Returns components sorted by (deg f, f): pairs (f, towers) where
    towers = [(e, v), ...] with exponents descending and v an integer
    generator of a summand isomorphic to Q[x]/(f^e). The union of the
    power bases {B^k v : k < e*deg f} is certified to span Q^n.
    """
    n = len(B)
    cp = charpoly(B)
    _, facs = factor_poly_q(cp)
    facs.sort(key=lambda t: (deg(t[0]), t[0]))
    comps = []
    all_vectors = []
    for f, a in facs:
        d = deg(f)
        N = mat_poly(f, B)
        # socle filtration: socs[j] is a basis of ker N intersect im N^j
        ker1 = hnf_lattice(kernel_int(N))
        socs = [ker1]
        Npow = identity_mat(n)
        for j in range(1, a):
            Npow = mat_mul(Npow, N)
            im = saturate_rows(transpose(Npow))
            socs.append(lattice_intersect(ker1, im))
        socs.append([])  # exponent a+1 level is zero
        towers = []
        for e in range(a, 0, -1):
            span = [list(r) for r in socs[e]]  # modulus: one level up
            for w in socs[e - 1]:
                if not any(w):
                    continue
                if span and rank_int(span + [list(w)]) == rank_int(span):
                    continue
                orbit = [list(w)]
                cur = list(w)
                for _ in range(d - 1):
                    cur = mat_vec(B, cur)
                    orbit.append(list(cur))
                span = span + orbit
                towers.append((e, list(w)))
        # climb from the socle to a generator: N^{e-1} v = w
        lifted = []
        for e, w in towers:
            if e == 1:
                lifted.append((1, w))
                continue
            Nk = identity_mat(n)
            for _ in range(e - 1):
                Nk = mat_mul(Nk, N)
            sol = solve_frac_right(Nk, w)
            assert sol is not None, "socle vector not in the expected image"
            vint, _ = clear_denominators([sol])
            lifted.append((e, vint[0]))
        lifted.sort(key=lambda t: -t[0])
        comps.append((f, lifted))
        for e, v in lifted:
            cur = list(v)
            for _ in range(d * e):
                all_vectors.append(list(cur))
                cur = mat_vec(B, cur)
    assert len(all_vectors) == n, "tower dimensions do not add up"
    assert det_int(transpose(all_vectors)) != 0, "towers do not span"
    return comps


def elementary_divisors(B, decomp=None):
    """Sorted multiset [(f, e), ...] of the elementary divisors over Q."""
    if decomp is None:
        decomp = primary_cyclic_decomposition(B)
    out = []
    for f, towers in decomp:
        for e, _ in towers:
            out.append((tuple(f), e))
    out.sort()
    return out


def invariant_factors(B, decomp=None):
    """Invariant factors d_1 | d_2 | ... | d_k, ascending coefficient lists."""
    if decomp is None:
        decomp = primary_cyclic_decomposition(B)
    k = max(len(towers) for _, towers in decomp)
    factors = []
    for j in range(k):
        g = [1]
        for f, towers in decomp:
            # towers sorted with e descending: towers[0] feeds the largest factor
            if j < len(towers):
                e = towers[j][0]
                for _ in range(e):
                    g = pmul(g, f)
        factors.append(g)
    factors.reverse()  # divisibility order, largest last
    return factors


def companion_block(g):
    """Companion matrix of monic g in the convention used for display:
    ones on the superdiagonal, negated coefficients down the first column."""
    m = deg(g)
    C = [[0] * m for _ in range(m)]
    for j in range(1, m):
        C[j - 1][j] = 1
    for k in range(m):
        C[m - 1 - k][0] = -g[k]
    return C


def _tower_basis_columns(B, f, e, v):
    """Reversed power basis of one tower: B^{m-1} v, ..., B v, v."""
    m = deg(f) * e
    cols = []
    cur = list(v)
    for _ in range(m):
        cols.append(list(cur))
        cur = mat_vec(B, cur)
    cols.reverse()
    return cols


def rational_canonical_form(B, decomp=None):
    """(R, T) with T an invertible integer matrix, T^{-1} B T = R, and R
    the block-diagonal form with one companion block per elementary
    divisor f^e, blocks sorted by (deg f, f, -e)."""
    if decomp is None:
        decomp = primary_cyclic_decomposition(B)
    cols = []
    blocks = []
    for f, towers in decomp:
        for e, v in towers:
            cols.extend(_tower_basis_columns(B, f, e, v))
            g = [1]
            for _ in range(e):
                g = pmul(g, f)
            blocks.append(companion_block(g))
    T = transpose(cols)
    Tinv = inv_frac(T)
    R_frac = mat_mul_frac(Tinv, mat_mul_frac([[x for x in row] for row in B], T))
    # verify against the directly assembled block diagonal
    n = len(B)
    expected = [[0] * n for _ in range(n)]
    off = 0
    for C in blocks:
        m = len(C)
        for i in range(m):
            for j in range(m):
                expected[off + i][off + j] = C[i][j]
        off += m
    assert R_frac == expected, "canonical form does not match its blocks"
    return int_mat_from_frac(R_frac), T


def similar_over_q(A, B):
    """A rational D with D*A*D^{-1} = B, or None when no such D exists.

    Returns (D, Dinv) as Fraction matrices; similarity over Q holds iff
    the elementary divisor multisets agree.
    """
    da = primary_cyclic_decomposition(A)
    db = primary_cyclic_decomposition(B)
    if elementary_divisors(A, da) != elementary_divisors(B, db):
        return None
    _, TA = rational_canonical_form(A, da)
    _, TB = rational_canonical_form(B, db)
    TAinv = inv_frac(TA)
    D = mat_mul_frac([[x for x in row] for row in TB], TAinv)
    Dinv = mat_mul_frac([[x for x in row] for row in TA], inv_frac(TB))
    # hard check of the conjugation identity
    lhs = mat_mul_frac(D, [[x for x in row] for row in A])
    rhs = mat_mul_frac([[x for x in row] for row in B], D)
    assert lhs == rhs, "transform fails to intertwine"
    return D, Dinv
