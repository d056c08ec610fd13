"""Residue ring O/g of a ring of integers modulo a full integral ideal.

Elements are canonical residues: coordinate vectors over the integral
basis reduced into the box cut out by the HNF of g, so equality is
tuple equality. The ring is Euclidean for phi(x) = N(xO + g), and
div_rem realizes that structure explicitly: divisibility is tried
first as an integer linear solve, and otherwise the quotient is built
from a split of unity along the primes of g where the valuation of x
reaches that of y. Every division result is checked (x = qy + r and
phi(r) < phi(y)) before it is returned.
"""

import math

from zsimilar import intlinalg, nfideals


class QuotElt:
    """A residue class, stored as its canonical coordinate tuple."""

    __slots__ = ("ring", "co")

    def __init__(self, ring, co):
        self.ring = ring
        self.co = co

    def __repr__(self):
        return "QuotElt(%s)" % (list(self.co),)

    def __eq__(self, other):
        if not isinstance(other, QuotElt):
            return NotImplemented
        assert self.ring is other.ring
        return self.co == other.co

    def __hash__(self):
        return hash(self.co)

    def __add__(self, other):
        other = self.ring.coerce(other)
        return self.ring.from_coords([a + b for a, b in zip(self.co, other.co)])

    __radd__ = __add__

    def __neg__(self):
        return self.ring.from_coords([-a for a in self.co])

    def __sub__(self, other):
        other = self.ring.coerce(other)
        return self.ring.from_coords([a - b for a, b in zip(self.co, other.co)])

    def __rsub__(self, other):
        return self.ring.coerce(other) - self

    def __mul__(self, other):
        other = self.ring.coerce(other)
        M = self.ring.mul_matrix(other)
        n = len(self.co)
        return self.ring.from_coords(
            [sum(self.co[i] * M[i][j] for i in range(n)) for j in range(n)]
        )

    __rmul__ = __mul__

    def __pow__(self, e):
        if e < 0:
            return self.ring.inverse(self) ** (-e)
        out = self.ring.one
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def is_zero(self):
        return not any(self.co)

    def is_unit(self):
        return self.ring.phi(self) == 1


class QuotientRing:
    """O/g with Euclidean division; g must be a full integral ideal."""

    def __init__(self, K, g, primes=None, factor_limit=None):
        assert isinstance(g, nfideals.NfIdeal)
        assert g.K is K
        self.K = K
        self.g = g
        self.H = [list(r) for r in g.H]
        self.pivots = intlinalg.hnf_pivots(self.H)
        self.card = g.norm()
        if primes is None:
            primes = nfideals.factor_ideal(g, factor_limit)
        self.primes = primes
        # prime powers P^e appearing in g, reused by every division
        self._ppowers = [(P, e, P.power(e)) for P, e in primes]
        self.zero = QuotElt(self, (0,) * K.n)
        one = [0] * K.n
        one[0] = 1
        self.one = self.from_coords(one)

    def __repr__(self):
        return "QuotientRing(card=%d)" % self.card

    def reduce(self, coords):
        r, _ = intlinalg.hnf_reduce_vector(self.H, self.pivots, list(coords))
        return tuple(r)

    def from_coords(self, coords):
        return QuotElt(self, self.reduce(coords))

    def from_elt(self, x):
        co = self.K.coerce(x).to_ibasis()
        assert all(c.denominator == 1 for c in co), "representative not integral"
        return self.from_coords([int(c) for c in co])

    def coerce(self, x):
        if isinstance(x, QuotElt):
            assert x.ring is self
            return x
        return self.from_elt(x)

    def lift(self, x):
        """The canonical integral representative as a field element."""
        assert x.ring is self
        return self.K.from_ibasis(list(x.co))

    def mul_matrix(self, x):
        """Integer matrix of multiplication by x on ibasis coordinates."""
        mt = self.K.mt
        n = self.K.n
        out = []
        for i in range(n):
            row = [0] * n
            for j in range(n):
                cj = x.co[j]
                if cj:
                    tj = mt[i][j]
                    for s in range(n):
                        row[s] += cj * tj[s]
            out.append(row)
        return out

    def phi(self, x):
        """Euclidean size N(xO + g); infinite on the zero class."""
        assert x.ring is self
        if x.is_zero():
            return math.inf
        M = self.mul_matrix(x)
        Hs = intlinalg.hnf_lattice([list(r) for r in M] + [list(r) for r in self.H])
        out = 1
        for i in range(self.K.n):
            out *= Hs[i][i]
        return out

    def is_unit(self, x):
        return self.phi(x) == 1

    def inverse(self, x):
        assert x.ring is self
        M = self.mul_matrix(x)
        stacked = [list(r) for r in M] + [list(r) for r in self.H]
        one = [1] + [0] * (self.K.n - 1)
        sol = intlinalg.solve_int_left(stacked, one)
        if sol is None:
            raise ZeroDivisionError("not a unit in the quotient")
        inv = self.from_coords(sol[: self.K.n])
        assert inv * x == self.one
        return inv

    def _annihilator(self, y):
        """HNF of the lattice {z : z*y in g}; contains g, so full rank."""
        M = self.mul_matrix(y)
        stacked = [list(r) for r in M] + [list(r) for r in self.H]
        kern = intlinalg.left_kernel_int(stacked)
        n = self.K.n
        ann = intlinalg.hnf_lattice([row[:n] for row in kern])
        assert len(ann) == n
        return ann

    def _canonical_q(self, qco, y):
        # quotients are pinned down modulo the annihilator of y; reducing
        # there makes div_rem independent of which solution the solver found
        ann = self._annihilator(y)
        r, _ = intlinalg.hnf_reduce_vector(ann, intlinalg.hnf_pivots(ann), list(qco))
        q = QuotElt(self, tuple(r))
        assert self.reduce(q.co) == q.co
        return q

    def div_rem(self, x, y):
        """q, r with x = qy + r and either r = 0 or phi(r) < phi(y)."""
        assert x.ring is self and y.ring is self
        if y.is_zero():
            raise ZeroDivisionError("division by the zero class")
        if x == y:
            return self.one, self.zero
        M = self.mul_matrix(y)
        stacked = [list(r) for r in M] + [list(r) for r in self.H]
        sol = intlinalg.solve_int_left(stacked, list(x.co))
        if sol is not None:
            q = self._canonical_q(sol[: self.K.n], y)
            r = x - q * y
            assert r.is_zero()
            return q, r
        # x is not divisible by y: split the primes of g by whether the
        # valuation of x (capped at the exponent in g) reaches that of y,
        # and take q = 1 on the reached side, q = 0 elsewhere
        side_a = nfideals.unit_ideal(self.K)
        side_b = nfideals.unit_ideal(self.K)
        xval = {}
        for P, e, Pe in self._ppowers:
            a = min(P.val_coords(list(x.co)), e)
            b = min(P.val_coords(list(y.co)), e)
            if a <= b:
                side_a = side_a * Pe
            else:
                side_b = side_b * Pe
            xval[P.key()] = a
        e0, _ = nfideals._split_of_unity(self.K, side_a, side_b)
        q = self._canonical_q(self.from_elt(e0).co, y)
        r = x - q * y
        assert not r.is_zero()
        pr, py = self.phi(r), self.phi(y)
        assert pr < py
        # the remainder keeps the valuation of x wherever x lost to y
        for P, e, _ in self._ppowers:
            a = xval[P.key()]
            if a < min(P.val_coords(list(y.co)), e):
                assert min(P.val_coords(list(r.co)), e) == a
        return q, r

    def elements(self):
        """All residues; only sensible for test-scale quotients."""
        n = self.K.n
        ranges = [range(self.H[i][i]) for i in range(n)]

        def rec(i, acc):
            if i == n:
                yield QuotElt(self, tuple(acc))
                return
            for v in ranges[i]:
                acc.append(v)
                yield from rec(i + 1, acc)
                acc.pop()

        yield from rec(0, [])
