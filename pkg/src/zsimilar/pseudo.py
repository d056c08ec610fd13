"""Pseudo-matrices over a number field: modules given as sums of
ideal-times-vector terms, their triangularization, and Steinitz forms.

A module M = a_1 v_1 + ... + a_k v_k inside K^m is carried as the pair
of lists (ideals, vectors). pseudo_hnf triangularizes the vector part
without changing the module; every two-row elimination step is the
unimodular transform built from a split of unity in the coprime pair
(a*A*d^-1, b*B*d^-1) with d = aA + bB, so determinant-ideal products
are preserved exactly. steinitz_form then pushes all ideal content
into the last position: M = O w_1 + ... + O w_{n-1} + a w_n.
"""

from math import gcd

from zsimilar import intlinalg
from zsimilar.nfideals import (
    coprime_representative,
    fractional_ideal,
    principal_frac,
    unit_ideal,
    _split_of_unity,
)


class RankDeficient(Exception):
    """Input module does not span; carries u != 0 with v_i . u = 0."""

    def __init__(self, witness):
        super().__init__("pseudo-matrix does not have full rank")
        self.witness = witness


class PseudoMatrix:
    __slots__ = ("K", "ideals", "vectors")

    def __init__(self, K, ideals, vectors):
        assert len(ideals) == len(vectors) and len(vectors) >= 1
        m = len(vectors[0])
        assert all(len(v) == m for v in vectors)
        self.K = K
        self.ideals = [fractional_ideal(K, a) for a in ideals]
        self.vectors = [[K.coerce(x) for x in v] for v in vectors]

    def __repr__(self):
        return "PseudoMatrix(k=%d, dim=%d)" % (len(self.vectors), self.dim())

    def dim(self):
        return len(self.vectors[0])

    def rows(self):
        return list(zip(self.ideals, self.vectors))


def module_lattice(P):
    """Canonical (den, HNF) pair for the module as a Z-lattice in Q^{n*m};
    two pseudo-matrices span the same module iff these pairs are equal."""
    K = P.K
    rows_q = []
    for a, v in P.rows():
        for grow in a.num.H:
            gamma = K.from_ibasis(grow)
            row = []
            for entry in v:
                row.extend(c / a.den for c in (gamma * entry).to_ibasis())
            rows_q.append(row)
    den = 1
    for row in rows_q:
        for c in row:
            den = den * c.denominator // gcd(den, c.denominator)
    rows_z = [[int(c * den) for c in row] for row in rows_q]
    H = intlinalg.hnf_lattice(rows_z)
    g = den
    for row in H:
        for x in row:
            g = gcd(g, x)
    return den // g, tuple(tuple(x // g for x in row) for row in H)


def _combine(K, pa, pv, qa, qv, col):
    """Replace (pa,pv),(qa,qv), both nonzero at col, by a pair spanning the
    same module whose first row has entry 1 at col and second has 0."""
    a = pv[col]
    b = qv[col]
    d = principal_frac(K, a) * pa + principal_frac(K, b) * qa
    dinv = d.inverse()
    ia = (principal_frac(K, a) * pa * dinv).to_integral()
    ib = (principal_frac(K, b) * qa * dinv).to_integral()
    e0, e1 = _split_of_unity(K, ia, ib)
    alpha = e0 / a
    beta = e1 / b
    e = [alpha * x + beta * y for x, y in zip(pv, qv)]
    f = [b * x - a * y for x, y in zip(pv, qv)]
    assert e[col] == K.one()
    assert f[col].is_zero()
    return (d, e), (pa * qa * dinv, f)


def _right_kernel_vector(K, rows):
    """Some u with rows . u = 0 over K, or None when column rank is full."""
    m = len(rows[0])
    R = [list(r) for r in rows]
    pivots = []
    r = 0
    for col in range(m):
        pr = next((i for i in range(r, len(R)) if not R[i][col].is_zero()), None)
        if pr is None:
            continue
        R[r], R[pr] = R[pr], R[r]
        inv = R[r][col].inverse()
        R[r] = [x * inv for x in R[r]]
        for i in range(len(R)):
            if i != r and not R[i][col].is_zero():
                c = R[i][col]
                R[i] = [x - c * y for x, y in zip(R[i], R[r])]
        pivots.append(col)
        r += 1
    if r == m:
        return None
    free = next(c for c in range(m) if c not in pivots)
    u = [K.zero() for _ in range(m)]
    u[free] = K.one()
    for prow, pcol in enumerate(pivots):
        u[pcol] = -R[prow][free]
    return u


def pseudo_hnf(P):
    """Same module, vector part upper triangular with pivot entries 1.

    Redundant generators are merged away; a module that fails to span
    K^m raises RankDeficient with an explicit right-kernel witness.
    """
    K = P.K
    m = P.dim()
    work = [(a, list(v)) for a, v in P.rows() if any(not x.is_zero() for x in v)]
    out = []
    for col in range(m):
        idx = next(
            (i for i, (_, v) in enumerate(work) if not v[col].is_zero()), None
        )
        if idx is None:
            continue
        pa, pv = work.pop(idx)
        i = 0
        while i < len(work):
            qa, qv = work[i]
            if qv[col].is_zero():
                i += 1
                continue
            (pa, pv), (qa, qv) = _combine(K, pa, pv, qa, qv, col)
            if any(not x.is_zero() for x in qv):
                work[i] = (qa, qv)
                i += 1
            else:
                work.pop(i)
        a = pv[col]
        if a != K.one():
            pa = pa * principal_frac(K, a)
            pv = [x / a for x in pv]
        out.append((pa, pv))
    assert not work, "leftover generator with untouched support"
    if len(out) < m:
        raise RankDeficient(_right_kernel_vector(K, P.vectors))
    return PseudoMatrix(K, [a for a, _ in out], [v for _, v in out])


def _steinitz_pair(K, pa, pv, qa, qv):
    """O e + (A B) f spanning the same module as A v + B w."""
    alpha = K.from_ibasis(pa.num.H[0]) / pa.den
    ia = (principal_frac(K, alpha) * pa.inverse()).to_integral()
    beta = coprime_representative(qa.inverse(), ia)
    ib = (principal_frac(K, beta) * qa.inverse()).to_integral()
    e0, e1 = _split_of_unity(K, ia, ib)
    p = e0 / alpha
    q = e1 / beta
    e = [alpha * x + beta * y for x, y in zip(pv, qv)]
    f = [-q * x + p * y for x, y in zip(pv, qv)]
    return e, pa * qa, f


def steinitz_form(P):
    """(vectors w_1..w_n, integral ideal a) with
    M = O w_1 + ... + O w_{n-1} + a w_n, the sum direct."""
    Q = pseudo_hnf(P)
    K = Q.K
    n = Q.dim()
    assert len(Q.vectors) == n
    ideals = list(Q.ideals)
    vectors = [list(v) for v in Q.vectors]
    one = fractional_ideal(K, unit_ideal(K))
    for i in range(n - 1):
        e, prod, f = _steinitz_pair(
            K, ideals[i], vectors[i], ideals[i + 1], vectors[i + 1]
        )
        ideals[i], vectors[i] = one, e
        ideals[i + 1], vectors[i + 1] = prod, f
    last = ideals[n - 1]
    if last.den != 1:
        vectors[n - 1] = [x / last.den for x in vectors[n - 1]]
        last = fractional_ideal(K, last.num)
    check = PseudoMatrix(K, ideals[:-1] + [last], vectors)
    assert module_lattice(check) == module_lattice(P)
    return vectors, last.to_integral()
