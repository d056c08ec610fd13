"""Certified archimedean embeddings of a number field.

Real places come from Sturm isolation plus exact bisection. Complex
places start from float Durand-Kerner seeds and are then validated by an
interval Krawczyk operator: for holomorphic f the Jacobian of
(Re f, Im f) is multiplication by f'(z), so complex interval arithmetic
encloses the mean-value form, and K(X) strictly inside X proves there is
exactly one root in X. Pairwise disjointness plus r1 + 2*r2 = n then
certifies that every root is accounted for. Floats only ever suggest
where to look; every accepted box is an exact rational statement.
"""

from fractions import Fraction

from zsimilar import polys
from zsimilar.intervals import (
    CIv,
    Iv,
    as_civ,
    civ_poly_eval,
    iv_log,
    iv_poly_eval,
)
from zsimilar.numfield import isolate_real_roots, refine_root


class PrecisionError(Exception):
    """Raised when an enclosure cannot be certified at the working
    precision; callers should retry with a larger prec."""


def _durand_kerner(coeffs, iters=400):
    """Float roots of a monic polynomial, ascending integer coeffs."""
    n = len(coeffs) - 1
    c = [float(a) for a in coeffs]

    def ev(z):
        acc = 0j
        for a in reversed(c):
            acc = acc * z + a
        return acc

    roots = [(0.4 + 0.9j) ** k for k in range(n)]
    for _ in range(iters):
        moved = 0.0
        for i in range(n):
            d = 1.0 + 0j
            for j in range(n):
                if j != i:
                    d *= roots[i] - roots[j]
            if d == 0:
                d = 1e-30
            step = ev(roots[i]) / d
            roots[i] -= step
            moved = max(moved, abs(step))
        if moved < 1e-14:
            break
    return roots


def _rationalize(x, prec=48):
    m = 1 << prec
    return Fraction(round(x * m), m)


def krawczyk_step(fq, dfq, box):
    """One Krawczyk operator application; returns the image box or None
    when the derivative enclosure is too wide to invert."""
    mre, mim = box.mid()
    m = CIv(Iv(mre), Iv(mim))
    fm = civ_poly_eval(fq, m)
    df = civ_poly_eval(dfq, box)
    ca, cb = df.mid()
    n2 = ca * ca + cb * cb
    if n2 == 0:
        return None
    y = CIv(Iv(ca / n2), Iv(-cb / n2))
    one = as_civ(1)
    return m - y * fm + (one - y * df) * (box - m)


def certify_complex_roots(f, r2, prec):
    """r2 disjoint boxes in the upper half plane, each certified to hold
    exactly one root of f, refined to width <= 2**-prec."""
    f = polys.trim(f)
    fq = [Fraction(c) for c in f]
    dfq = polys.derivative(fq)
    if r2 == 0:
        return []
    seeds = [z for z in _durand_kerner(f) if z.imag > 1e-9]
    seeds.sort(key=lambda z: (z.real, z.imag))
    if len(seeds) != r2:
        raise PrecisionError("float seeding lost conjugate pairs")
    target = Fraction(1, 1 << prec)
    boxes = []
    for z in seeds:
        cre = _rationalize(z.real)
        cim = _rationalize(z.imag)
        rad = Fraction(1, 1 << 20)
        cert = None
        for _ in range(60):
            box = CIv(Iv(cre - rad, cre + rad), Iv(cim - rad, cim + rad))
            if box.im.lo <= 0:
                break
            K = krawczyk_step(fq, dfq, box)
            if K is not None and K.interior_of(box):
                cert = K
                break
            rad *= 2
        if cert is None:
            raise PrecisionError("Krawczyk certification failed at a seed")
        # outward rounding after every step keeps the endpoint
        # denominators bounded; without it they square each iteration
        box = cert.round_to(prec + 16)
        while box.width() > target:
            K = krawczyk_step(fq, dfq, box)
            if K is None:
                raise PrecisionError("derivative enclosure collapsed")
            nre = K.re.intersect(box.re)
            nim = K.im.intersect(box.im)
            if nre is None or nim is None:
                raise PrecisionError("Krawczyk refinement emptied the box")
            nxt = CIv(nre, nim).round_to(prec + 16)
            if nxt.width() >= box.width():
                raise PrecisionError("Krawczyk refinement stalled")
            box = nxt
        boxes.append(box)
    for i in range(len(boxes)):
        for j in range(i + 1, len(boxes)):
            a, b = boxes[i], boxes[j]
            if a.re.intersect(b.re) is not None and a.im.intersect(b.im) is not None:
                raise PrecisionError("certified boxes overlap")
        if boxes[i].im.lo <= 0:
            raise PrecisionError("complex box touches the real axis")
    boxes.sort(key=lambda b: (b.re.mid(), b.im.mid()))
    return boxes


class Embeddings:
    """All archimedean places of a field at a fixed working precision."""

    def __init__(self, field, prec):
        self.field = field
        self.prec = prec
        iso = isolate_real_roots(field.f)
        self.real = []
        for a, b in iso:
            lo, hi = refine_root(field.f, a, b, prec)
            self.real.append(Iv(lo, hi))
        assert len(self.real) == field.r1
        self.cplx = certify_complex_roots(field.f, field.r2, prec)

    @classmethod
    def get(cls, field, prec):
        cached = field._cache.get("embeddings")
        if cached is not None and cached.prec >= prec:
            return cached
        want = prec
        if cached is not None:
            want = max(prec, 2 * cached.prec)
        emb = cls(field, want)
        field._cache["embeddings"] = emb
        return emb

    def eval_real(self, x, i):
        return iv_poly_eval(list(self.field.coerce(x).co), self.real[i])

    def eval_cplx(self, x, j):
        return civ_poly_eval(list(self.field.coerce(x).co), self.cplx[j])

    def log_abs_vector(self, x):
        """Per-place log of the normalized absolute value: log|sigma(x)|
        at real places, log|sigma(x)|^2 at complex ones. Raises
        PrecisionError if any enclosure touches zero."""
        x = self.field.coerce(x)
        out = []
        for i in range(self.field.r1):
            v = abs(self.eval_real(x, i))
            if v.lo <= 0:
                raise PrecisionError("real embedding enclosure touches zero")
            out.append(iv_log(v, self.prec))
        for j in range(self.field.r2):
            v = self.eval_cplx(x, j).abs2()
            if v.lo <= 0:
                raise PrecisionError("complex embedding enclosure touches zero")
            out.append(iv_log(v, self.prec))
        return out

    def t2_gram(self, elements):
        """Interval Gram matrix of sum_sigma sigma(x)*conj(sigma(y))."""
        xs = [self.field.coerce(x) for x in elements]
        reals = [[self.eval_real(x, i) for i in range(self.field.r1)] for x in xs]
        cplxs = [[self.eval_cplx(x, j) for j in range(self.field.r2)] for x in xs]
        k = len(xs)
        G = [[None] * k for _ in range(k)]
        for a in range(k):
            for b in range(a, k):
                acc = Iv(0)
                for i in range(self.field.r1):
                    acc = acc + reals[a][i] * reals[b][i]
                for j in range(self.field.r2):
                    za, zb = cplxs[a][j], cplxs[b][j]
                    acc = acc + 2 * (za.re * zb.re + za.im * zb.im)
                G[a][b] = acc
                G[b][a] = acc
        return G


def t2_gram_rational_minorant(Giv):
    """Rational symmetric matrix Q with Q <= true form on the interval
    Gram Giv, via a Gershgorin shift of the midpoint matrix; returns None
    when the shift destroys positive definiteness (caller should raise
    precision)."""
    k = len(Giv)
    mid = [[Giv[i][j].mid() for j in range(k)] for i in range(k)]
    rad = [[Giv[i][j].width() / 2 for j in range(k)] for i in range(k)]
    out = [row[:] for row in mid]
    for i in range(k):
        out[i][i] -= sum(rad[i])
        if out[i][i] <= 0:
            return None
    return out


def t2_gram_rational_majorant(Giv):
    """Rational symmetric matrix with form >= the true T2 form."""
    k = len(Giv)
    mid = [[Giv[i][j].mid() for j in range(k)] for i in range(k)]
    rad = [[Giv[i][j].width() / 2 for j in range(k)] for i in range(k)]
    out = [row[:] for row in mid]
    for i in range(k):
        out[i][i] += sum(rad[i])
    return out


def iv_det(M):
    """Interval determinant by cofactor expansion along the rows.

    Each recursion level consumes the next row, so a column subset
    determines the submatrix; memoizing on it keeps the cost at
    2**n instead of n!.  Fine for the small n used here.
    """
    n = len(M)
    if n == 0:
        return Iv(1)
    memo = {}

    def rec(cols):
        if len(cols) == 1:
            return M[n - 1][cols[0]]
        got = memo.get(cols)
        if got is not None:
            return got
        r = n - len(cols)
        out = Iv(0)
        for t, c in enumerate(cols):
            sub = rec(cols[:t] + cols[t + 1 :])
            term = M[r][c] * sub
            out = out + term if t % 2 == 0 else out - term
        memo[cols] = out
        return out

    return rec(tuple(range(n)))


def iv_solve_cramer(A, b):
    """Enclosures of the solution of A x = b, all entries intervals.

    Raises PrecisionError when the determinant enclosure straddles
    zero, so callers can retry at higher precision.
    """
    n = len(A)
    d = iv_det(A)
    if d.straddles_zero():
        raise PrecisionError("interval determinant straddles zero")
    out = []
    for j in range(n):
        Aj = [row[:j] + [b[i]] + row[j + 1 :] for i, row in enumerate(A)]
        out.append(iv_det(Aj) / d)
    return out
