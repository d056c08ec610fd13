"""Finite-dimensional associative algebras over prime fields.

Provides the Jacobson radical (p-power twisted trace chain), radical
filtrations, quotients by ideals, and a certified Wedderburn splitting of
a semisimple algebra into matrix algebras over finite fields. Elements
are coefficient vectors (plain ints mod p) over a fixed basis, with
multiplication given by a structure-constant table.

Splittings are certified at runtime: block dimensions must add up, block
maps must be unital, multiplicative on all basis pairs, and jointly
injective. A wrong radical upstream makes those checks fail, so a
returned splitting is always a genuine isomorphism.
"""

import random

from zsimilar.arith import inv_mod
from zsimilar.ffield import FiniteField
from zsimilar.polys import deg, factor_mod_p, mp_divmod, mp_mul, mp_sub, mp_trim


# ---------------------------------------------------------------------------
# linear algebra mod p on plain int matrices


def rref_p(M, p):
    """Row echelon form mod p; returns (rows, pivot_columns)."""
    R = [[x % p for x in row] for row in M]
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
        inv = inv_mod(R[r][c], p)
        R[r] = [x * inv % p for x in R[r]]
        for i in range(m):
            if i != r and R[i][c]:
                f = R[i][c]
                R[i] = [(x - f * y) % p for x, y in zip(R[i], R[r])]
        pivots.append(c)
        r += 1
        if r == m:
            break
    return R[:r], pivots


def nullspace_p(M, p, ncols=None):
    """Basis of the right kernel mod p."""
    n = ncols if ncols is not None else (len(M[0]) if M else 0)
    if not M:
        return [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    R, pivots = rref_p(M, p)
    free = [j for j in range(n) if j not in pivots]
    out = []
    for f in free:
        v = [0] * n
        v[f] = 1
        for i, c in enumerate(pivots):
            v[c] = (-R[i][f]) % p
        out.append(v)
    return out


def solve_p(M, b, p):
    """One solution of M x = b mod p, or None."""
    n = len(M[0]) if M else 0
    aug = [list(M[i]) + [b[i]] for i in range(len(M))]
    R, pivots = rref_p(aug, p)
    if n in pivots:
        return None
    x = [0] * n
    for i, c in enumerate(pivots):
        x[c] = R[i][n]
    return x


def span_basis(vectors, p):
    """Echelonized basis of the span of the given vectors."""
    if not vectors:
        return []
    R, _ = rref_p(vectors, p)
    return [row for row in R if any(row)]


def in_span(v, basis, p):
    if not basis:
        return not any(x % p for x in v)
    w = [x % p for x in v]
    for row in basis:
        c = next(j for j, x in enumerate(row) if x)
        if w[c]:
            f = w[c] * inv_mod(row[c], p) % p
            w = [(x - f * y) % p for x, y in zip(w, row)]
    return not any(w)


def express_in(rows, v, p):
    """Coefficients of v as a combination of rows, or None."""
    M = [[rows[i][j] for i in range(len(rows))] for j in range(len(v))]
    return solve_p(M, v, p)


def _matmul_p(A, B, p):
    n, m = len(A), len(B[0])
    t = len(B)
    return [
        [sum(A[i][s] * B[s][j] for s in range(t)) % p for j in range(m)]
        for i in range(n)
    ]


def _mat_minpoly_p(T, p):
    """Monic minimal polynomial of a square matrix over F_p (ascending)."""
    n = len(T)
    ident = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    flat = lambda M: [x for row in M for x in row]
    rows = [flat(ident)]
    cur = ident
    while True:
        cur = _matmul_p(cur, T, p)
        co = express_in(rows, flat(cur), p)
        if co is not None:
            return mp_trim([(-c) % p for c in co] + [1], p)
        rows.append(flat(cur))


def _mp_xgcd(f, g, p):
    """(d, u, v) with u f + v g = d monic, in F_p[x]."""
    f = mp_trim(list(f), p)
    g = mp_trim(list(g), p)
    u0, u1 = [1], []
    v0, v1 = [], [1]
    while g:
        q, r = mp_divmod(f, g, p)
        f, g = g, r
        u0, u1 = u1, mp_sub(u0, mp_mul(q, u1, p), p)
        v0, v1 = v1, mp_sub(v0, mp_mul(q, v1, p), p)
    c = inv_mod(f[-1], p)
    scale = lambda h: mp_trim([x * c % p for x in h], p)
    return scale(f), scale(u0), scale(v0)


def _mp_pow(f, e, p):
    out = [1]
    base = list(f)
    while e:
        if e & 1:
            out = mp_mul(out, base, p)
        base = mp_mul(base, base, p)
        e >>= 1
    return out


def charpoly_mod_p(M, p):
    """Characteristic polynomial mod p, ascending, via Hessenberg reduction."""
    n = len(M)
    H = [[x % p for x in row] for row in M]
    for j in range(n - 2):
        piv = None
        for i in range(j + 1, n):
            if H[i][j]:
                piv = i
                break
        if piv is None:
            continue
        if piv != j + 1:
            H[piv], H[j + 1] = H[j + 1], H[piv]
            for r in range(n):
                H[r][piv], H[r][j + 1] = H[r][j + 1], H[r][piv]
        inv = inv_mod(H[j + 1][j], p)
        for i in range(j + 2, n):
            if H[i][j]:
                f = H[i][j] * inv % p
                Hi, Hj1 = H[i], H[j + 1]
                for t in range(n):
                    Hi[t] = (Hi[t] - f * Hj1[t]) % p
                for r in range(n):
                    H[r][j + 1] = (H[r][j + 1] + f * H[r][i]) % p
    chain = [[1]]
    for k in range(1, n + 1):
        prev = chain[k - 1]
        cur = mp_sub([0] + prev, [c * H[k - 1][k - 1] % p for c in prev], p)
        prod = 1
        for i in range(k - 1, 0, -1):
            prod = prod * H[i][i - 1] % p
            if not prod:
                break
            if H[i - 1][k - 1]:
                t = H[i - 1][k - 1] * prod % p
                cur = mp_sub(cur, [c * t % p for c in chain[i - 1]], p)
        chain.append(cur)
    out = chain[n]
    return out + [0] * (n + 1 - len(out))


# ---------------------------------------------------------------------------


class FpAlgebra:
    """Unital associative F_p-algebra from structure constants.

    table[i][j] is the coefficient vector of e_i * e_j; unit is the
    coefficient vector of the identity.
    """

    def __init__(self, p, table, unit):
        self.p = p
        self.dim = len(table)
        self.table = [[[c % p for c in cell] for cell in row] for row in table]
        self.unit = [c % p for c in unit]
        assert self.mul(self.unit, self.unit) == self.unit

    @classmethod
    def from_matrices(cls, p, mats):
        """Algebra spanned by the given integer matrices mod p; the span
        must be closed under products and contain the identity."""
        dim = len(mats)
        n = len(mats[0])
        flat = [
            [mats[t][i][j] % p for t in range(dim)]
            for i in range(n)
            for j in range(n)
        ]
        table = []
        for a in range(dim):
            row = []
            for b in range(dim):
                prod = [
                    sum(mats[a][i][s] * mats[b][s][j] for s in range(n)) % p
                    for i in range(n)
                    for j in range(n)
                ]
                coeffs = solve_p(flat, prod, p)
                assert coeffs is not None, "matrices not closed under product"
                row.append(coeffs)
            table.append(row)
        ident = [1 if i == j else 0 for i in range(n) for j in range(n)]
        unit = solve_p(flat, ident, p)
        assert unit is not None, "identity not in the span"
        return cls(p, table, unit)

    def basis_vectors(self):
        return [[1 if i == j else 0 for j in range(self.dim)] for i in range(self.dim)]

    def mul(self, a, b):
        p, dim = self.p, self.dim
        out = [0] * dim
        for i, x in enumerate(a):
            if x:
                ti = self.table[i]
                for j, y in enumerate(b):
                    if y:
                        c = x * y % p
                        cell = ti[j]
                        for t in range(dim):
                            if cell[t]:
                                out[t] = (out[t] + c * cell[t]) % p
        return out

    def lmul_matrix(self, a):
        """Matrix of x -> a x (columns are images of basis vectors)."""
        p, dim = self.p, self.dim
        cols = []
        for j in range(dim):
            col = [0] * dim
            for i, x in enumerate(a):
                if x:
                    cell = self.table[i][j]
                    for t in range(dim):
                        if cell[t]:
                            col[t] = (col[t] + x * cell[t]) % p
            cols.append(col)
        return [[cols[j][i] for j in range(dim)] for i in range(dim)]

    def rmul_matrix(self, a):
        dim = self.dim
        cols = []
        for j in range(dim):
            ej = [0] * dim
            ej[j] = 1
            cols.append(self.mul(ej, a))
        return [[cols[j][i] for j in range(dim)] for i in range(dim)]

    def power(self, a, e):
        out = list(self.unit)
        base = a
        while e:
            if e & 1:
                out = self.mul(out, base)
            base = self.mul(base, base)
            e >>= 1
        return out

    def trace_lmul(self, a):
        """Trace of left multiplication by a (regular representation)."""
        p, dim = self.p, self.dim
        tr = 0
        for i, x in enumerate(a):
            if x:
                for j in range(dim):
                    tr = (tr + x * self.table[i][j][j]) % p
        return tr

    def is_unit(self, a):
        return len(rref_p(self.lmul_matrix(a), self.p)[1]) == self.dim

    def inverse(self, a):
        x = solve_p(self.lmul_matrix(a), self.unit, self.p)
        if x is None:
            raise ZeroDivisionError("not a unit")
        assert self.mul(x, a) == self.unit and self.mul(a, x) == self.unit
        return x

    def eval_poly(self, f, a, unit=None):
        """f(a) by Horner; the constant term is taken against unit."""
        if unit is None:
            unit = self.unit
        out = [0] * self.dim
        for c in reversed(f):
            out = self.mul(out, a)
            if c % self.p:
                out = [(o + c * u) % self.p for o, u in zip(out, unit)]
        return out

    def minpoly_in(self, a, unit=None):
        """Monic minimal polynomial of a over F_p, a^0 taken as unit."""
        if unit is None:
            unit = self.unit
        p = self.p
        rows = [list(unit)]
        cur = list(unit)
        while True:
            cur = self.mul(cur, a)
            co = express_in(rows, cur, p)
            if co is not None:
                return mp_trim([(-c) % p for c in co] + [1], p)
            rows.append(list(cur))

    # -- radical --------------------------------------------------------

    def _charpoly_coeff(self, z, q):
        """Coefficient of lambda^{dim-q} in the charpoly of left
        multiplication by z (regular representation)."""
        n = self.dim
        if q == 1:
            return (-self.trace_lmul(z)) % self.p
        L = self.lmul_matrix(z)
        if q == 2:
            # sum of principal 2x2 minors, cheaper than a full charpoly
            p = self.p
            acc = 0
            for i in range(n):
                for j in range(i + 1, n):
                    acc = (acc + L[i][i] * L[j][j] - L[i][j] * L[j][i]) % p
            return acc
        return charpoly_mod_p(L, self.p)[n - q]

    def radical(self):
        """Echelon basis of the Jacobson radical.

        Descending chain of coefficient conditions in the regular
        representation: R_0 = A and

            R_{i+1} = {x in R_i : c_{p^i}(xy) = 0 for all y in R_i},

        where c_k(z) is the coefficient of lambda^{dim-k} in the
        characteristic polynomial of left multiplication by z, and i runs
        while p^i <= dim. On each R_i the map x -> c_{p^i}(xy) is additive
        and p^i-semilinear, hence F_p-linear over the prime field; a plain
        trace-form kernel is wrong in small characteristic (it already
        fails for triangular 2x2 matrices over F_2 in the regular
        representation). The output is certified to be a nilpotent
        two-sided ideal, and the splitting of the quotient certifies
        semisimplicity, so together they pin the radical down exactly.
        """
        p = self.p
        basis = self.basis_vectors()
        q = 1
        while basis and q <= self.dim:
            rows = []
            for y in basis:
                row = []
                for b in basis:
                    row.append(self._charpoly_coeff(self.mul(b, y), q))
                rows.append(row)
            null = nullspace_p(rows, p, ncols=len(basis))
            basis = span_basis([self._combine(c, basis) for c in null], p)
            q *= p
        self._assert_nilpotent_ideal(basis)
        return basis

    def _combine(self, coords, basis):
        p = self.p
        out = [0] * self.dim
        for c, b in zip(coords, basis):
            if c % p:
                out = [(o + c * x) % p for o, x in zip(out, b)]
        return out

    def _assert_nilpotent_ideal(self, rad):
        p = self.p
        if not rad:
            return
        for b in self.basis_vectors():
            for r in rad:
                assert in_span(self.mul(b, r), rad, p), "radical not a left ideal"
                assert in_span(self.mul(r, b), rad, p), "radical not a right ideal"
        cur = rad
        steps = 0
        while cur:
            nxt = span_basis([self.mul(a, b) for a in cur for b in rad], p)
            assert not nxt or len(nxt) < len(cur), "radical candidate not nilpotent"
            cur = nxt
            steps += 1
            assert steps <= self.dim + 1
        return

    def subspace_product(self, U, V):
        return span_basis([self.mul(u, v) for u in U for v in V], self.p)

    def radical_filtration(self, rad):
        """[J, J^2, J^4, J^8, ...] echelon bases, ending before zero."""
        out = []
        cur = rad
        while cur:
            out.append(cur)
            cur = self.subspace_product(cur, cur)
        return out

    def center(self):
        rows = []
        for b in self.basis_vectors():
            L = self.lmul_matrix(b)
            R = self.rmul_matrix(b)
            rows.extend(
                [(L[i][j] - R[i][j]) % self.p for j in range(self.dim)]
                for i in range(self.dim)
            )
        return span_basis(nullspace_p(rows, self.p, ncols=self.dim), self.p)


def quotient_algebra(A, ideal):
    """Quotient by a two-sided ideal: returns (Q, proj, lift).

    proj maps an element of A to quotient coordinates, lift is a linear
    section. Classes are represented by reduction against the echelonized
    ideal basis.
    """
    p = A.p
    if not ideal:
        return A, (lambda a: [x % p for x in a]), (lambda c: [x % p for x in c])
    IR, ipiv = rref_p(ideal, p)
    IR = [row for row in IR if any(row)]
    free = [j for j in range(A.dim) if j not in ipiv]

    def reduce_vec(a):
        w = [x % p for x in a]
        for i, c in enumerate(ipiv):
            if w[c]:
                f = w[c]
                w = [(x - f * y) % p for x, y in zip(w, IR[i])]
        return w

    def proj(a):
        w = reduce_vec(a)
        return [w[j] for j in free]

    def lift(co):
        out = [0] * A.dim
        for c, j in zip(co, free):
            out[j] = c % p
        return out

    table = []
    for i in range(len(free)):
        ei = lift([1 if t == i else 0 for t in range(len(free))])
        row = []
        for j in range(len(free)):
            ej = lift([1 if t == j else 0 for t in range(len(free))])
            row.append(proj(A.mul(ei, ej)))
        table.append(row)
    Q = FpAlgebra(p, table, proj(A.unit))
    return Q, proj, lift


# ---------------------------------------------------------------------------
# Wedderburn splitting


class SimpleBlock:
    """One factor Mat_m(k) of a split semisimple algebra, with maps both ways.

    project(a) is the block image of any algebra element; section(M) is the
    linear section landing in the block's two-sided ideal, inverse to
    project there.
    """

    def __init__(self, algebra, idempotent, ideal_basis, field, msize, wall, kmat_rows, umains):
        self.algebra = algebra
        self.idempotent = idempotent
        self.basis = ideal_basis
        self.field = field
        self.msize = msize
        self._wall = wall  # echelon basis of the simple module W
        self._wall_t = [[wall[i][j] for i in range(len(wall))] for j in range(algebra.dim)]
        self._kmat = kmat_rows  # square matrix, columns phi^t u_i in W-coords
        self._umains = umains  # k-basis vectors of W, in algebra coords
        self._section_vectors = None

    def project(self, a):
        """Image of a in Mat_m(k)."""
        A, p, F, m = self.algebra, self.algebra.p, self.field, self.msize
        f = F.k
        cols = []
        for j in range(m):
            img = A.mul(a, self._umains[j])
            wco = solve_p(self._wall_t, img, p)
            assert wco is not None, "module not stable under the algebra"
            kco = solve_p(self._kmat, wco, p)
            assert kco is not None
            cols.append([F.el(kco[i * f : (i + 1) * f]) for i in range(m)])
        return [[cols[j][i] for j in range(m)] for i in range(m)]

    def flat_project(self, a):
        """project(a) flattened to a plain F_p vector of length m*m*f."""
        M = self.project(a)
        out = []
        for row in M:
            for el in row:
                out.extend(el)
        return out

    def section(self, M):
        """Element of the algebra mapping to M in this block (0 elsewhere)."""
        if self._section_vectors is None:
            self._build_section()
        p = self.algebra.p
        flat = []
        for row in M:
            for el in row:
                flat.extend(el)
        out = [0] * self.algebra.dim
        for c, vec in zip(flat, self._section_vectors):
            if c % p:
                out = [(o + c * x) % p for o, x in zip(out, vec)]
        return out

    def _build_section(self):
        p = self.algebra.p
        nflat = self.msize * self.msize * self.field.k
        assert len(self.basis) == nflat, "block dimension mismatch"
        rows = [self.flat_project(b) for b in self.basis]
        cols = [[rows[i][j] for i in range(nflat)] for j in range(nflat)]
        sect = []
        for t in range(nflat):
            target = [1 if s == t else 0 for s in range(nflat)]
            co = solve_p(cols, target, p)
            assert co is not None, "block map not surjective"
            vec = [0] * self.algebra.dim
            for c, b in zip(co, self.basis):
                if c % p:
                    vec = [(v + c * x) % p for v, x in zip(vec, b)]
            sect.append(vec)
        self._section_vectors = sect


def _central_idempotents(Q, zbasis, rng):
    """Primitive idempotents of the center of a semisimple algebra."""
    p = Q.p
    pending = [list(Q.unit)]
    done = []
    while pending:
        e = pending.pop()
        sub = span_basis([Q.mul(e, z) for z in zbasis], p)
        de = len(sub)
        if de == 1:
            done.append(e)
            continue
        split = False
        tries = 0
        candidates = list(sub)
        while True:
            if candidates:
                z = candidates.pop(0)
            else:
                z = Q._combine([rng.randrange(p) for _ in sub], sub)
                tries += 1
                assert tries < 200 + 20 * de, "center splitting stalled"
            if not any(z):
                continue
            mp = Q.minpoly_in(z, unit=e)
            fac = factor_mod_p(mp, p)
            if len(fac) == 1 and fac[0][1] == 1:
                if deg(mp) == de:
                    done.append(e)  # eZ is a field, certified by dimension
                    break
                continue
            if any(a > 1 for _, a in fac):
                raise ArithmeticError("center is not semisimple")
            parts = []
            for g, _ in fac:
                h = mp_divmod(mp, g, p)[0]
                d, u, v = _mp_xgcd(h, g, p)
                assert d == [1], "minpoly factors not coprime"
                ei = Q.eval_poly(mp_mul(u, h, p), z, unit=e)
                parts.append(ei)
            total = [0] * Q.dim
            for ei in parts:
                assert Q.mul(ei, ei) == ei, "projector not idempotent"
                total = [(a + b) % p for a, b in zip(total, ei)]
            for s in range(len(parts)):
                for t in range(s + 1, len(parts)):
                    prod = Q.mul(parts[s], parts[t])
                    assert not any(prod), "projectors not orthogonal"
            assert total == [x % p for x in e], "projectors do not sum to e"
            pending.extend(parts)
            split = True
            break
        if split:
            continue
    return done


def _simple_module(Q, e, sbasis, rng):
    """A simple left module W inside the block ideal S = Qe, plus its
    certified endomorphism field: returns (wall, phi_matrix, minpoly)."""
    p = Q.p
    # initial candidate: spin the first basis element of S
    w = next(b for b in sbasis if any(b))
    W = span_basis([Q.mul(b, w) for b in Q.basis_vectors()], p)
    while True:
        dw = len(W)
        # endomorphisms commuting with the left action
        actions = []
        wall_t = [[W[i][j] for i in range(dw)] for j in range(Q.dim)]
        for b in Q.basis_vectors():
            cols = []
            for v in W:
                img = Q.mul(b, v)
                co = solve_p(wall_t, img, p)
                assert co is not None, "candidate module not invariant"
                cols.append(co)
            actions.append([[cols[j][i] for j in range(dw)] for i in range(dw)])
        rows = []
        for L in actions:
            # condition L T = T L, linear in entries of T
            for i in range(dw):
                for j in range(dw):
                    row = [0] * (dw * dw)
                    for s in range(dw):
                        row[s * dw + j] = (row[s * dw + j] + L[i][s]) % p
                        row[i * dw + s] = (row[i * dw + s] - L[s][j]) % p
                    rows.append(row)
        endo = nullspace_p(rows, p, ncols=dw * dw)
        de = len(endo)
        progressed = False
        tries = 0
        candidates = list(endo)
        while True:
            if candidates:
                flat = candidates.pop(0)
            else:
                flat = [0] * (dw * dw)
                for v in endo:
                    c = rng.randrange(p)
                    if c:
                        flat = [(a + c * b) % p for a, b in zip(flat, v)]
                tries += 1
                assert tries < 200 + 20 * de, "module splitting stalled"
            if not any(flat):
                continue
            T = [flat[i * dw : (i + 1) * dw] for i in range(dw)]
            mp = _mat_minpoly_p(T, p)
            fac = factor_mod_p(mp, p)
            if len(fac) == 1 and fac[0][1] == 1:
                if deg(mp) == de:
                    return W, T, mp  # End is a field, certified
                continue
            # reducible: cut W down by the kernel of one factor
            g, a = fac[0]
            ga = _mp_pow(g, a, p)
            # evaluate ga at T
            n = dw
            ident = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
            val = [[0] * n for _ in range(n)]
            for c in reversed(ga):
                val = _matmul_p(val, T, p)
                if c % p:
                    val = [
                        [(val[i][j] + c * ident[i][j]) % p for j in range(n)]
                        for i in range(n)
                    ]
            ker = nullspace_p(val, p, ncols=n)
            assert 0 < len(ker) < dw, "kernel of factor must cut properly"
            Wnew = span_basis(
                [Q._combine(co, W) for co in ker], p
            )
            W = Wnew
            progressed = True
            break
        assert progressed and len(W) < dw


def split_semisimple(Q, seed=0):
    """Certified Wedderburn decomposition of a semisimple algebra.

    Returns a list of SimpleBlock. Raises if Q is not semisimple (the
    certification fails loudly rather than returning a wrong answer).
    """
    p = Q.p
    rng = random.Random(seed)
    zbasis = Q.center()
    idems = _central_idempotents(Q, zbasis, rng)
    blocks = []
    for e in idems:
        sbasis = span_basis([Q.mul(b, e) for b in Q.basis_vectors()], p)
        wall, T, mp = _simple_module(Q, e, sbasis, rng)
        f = deg(mp)
        F = FiniteField(p, f, modulus=mp) if f > 1 else FiniteField(p)
        dw = len(wall)
        assert dw % f == 0, "module dimension not divisible by field degree"
        m = dw // f
        # pick a k-basis of W greedily: u with phi-orbits spanning W
        umains = []
        span = []
        kvecs = []
        for idx in range(dw):
            cand = [1 if t == idx else 0 for t in range(dw)]
            if span and in_span(cand, span, p):
                continue
            orbit = []
            cur = cand
            for _ in range(f):
                orbit.append(cur)
                cur = [
                    sum(T[i][j] * cur[j] for j in range(dw)) % p for i in range(dw)
                ]
            umains.append(Q._combine(cand, wall))
            kvecs.extend(orbit)
            span = span_basis(span + orbit, p)
            if len(umains) == m:
                break
        assert len(umains) == m and len(span) == dw, "no free k-basis found"
        # kmat columns: phi^t u_i in W coordinates, ordered (i, t)
        kmat = [[kvecs[col][r] for col in range(dw)] for r in range(dw)]
        blocks.append(SimpleBlock(Q, e, sbasis, F, m, wall, kmat, umains))
    _certify_split(Q, blocks)
    return blocks


def _certify_split(Q, blocks):
    from zsimilar.ffield import ff_identity, ff_matmul

    total = 0
    stacked = []
    basis = Q.basis_vectors()
    images = []
    for blk in blocks:
        F, m = blk.field, blk.msize
        total += m * m * F.k
        ident = blk.project(Q.unit)
        assert ident == ff_identity(F, m), "unit does not map to identity"
        imgs = [blk.project(b) for b in basis]
        images.append(imgs)
    assert total == Q.dim, "block dimensions do not add up"
    for b_i in range(Q.dim):
        row = []
        for imgs, blk in zip(images, blocks):
            for rrow in imgs[b_i]:
                for el in rrow:
                    row.extend(el)
        stacked.append(row)
    _, piv = rref_p(stacked, Q.p)
    assert len(piv) == Q.dim, "joint block map not injective"
    for imgs, blk in zip(images, blocks):
        F = blk.field
        for i in range(Q.dim):
            for j in range(Q.dim):
                prod = blk.project(Q.mul(basis[i], basis[j]))
                expect = ff_matmul(F, imgs[i], imgs[j])
                assert prod == expect, "block map not multiplicative"


def wedderburn(A, seed=0):
    """Radical, semisimple quotient, and certified splitting of A.

    Returns (rad_basis, Q, proj, lift, blocks).
    """
    rad = A.radical()
    Q, proj, lift = quotient_algebra(A, rad)
    assert not Q.radical(), "semisimple quotient still has a radical"
    blocks = split_semisimple(Q, seed=seed)
    return rad, Q, proj, lift, blocks
