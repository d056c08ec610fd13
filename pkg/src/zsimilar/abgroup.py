"""Finite abelian groups presented by generator orders, via integer HNF/SNF.

A group is Z^k modulo a relation lattice. Elements are integer exponent
row vectors taken modulo the relations. Membership of a target in a
subgroup generated by given vectors, subgroup index, and quotient
presentations all reduce to Hermite/Smith forms from intlinalg.
"""

from zsimilar import intlinalg as la


class FinAbGroup:
    """Direct sum of Z/d_i with d_i >= 1, elements as exponent vectors."""

    def __init__(self, orders):
        assert all(d >= 1 for d in orders)
        self.orders = list(orders)
        self.k = len(orders)

    def order(self):
        out = 1
        for d in self.orders:
            out *= d
        return out

    def reduce(self, v):
        assert len(v) == self.k
        return [x % d for x, d in zip(v, self.orders)]

    def add(self, a, b):
        return [(x + y) % d for x, y, d in zip(a, b, self.orders)]

    def neg(self, a):
        return [(-x) % d for x, d in zip(a, self.orders)]

    def scale(self, c, a):
        return [c * x % d for x, d in zip(a, self.orders)]

    def zero(self):
        return [0] * self.k

    def is_zero(self, a):
        return all(x % d == 0 for x, d in zip(a, self.orders))

    def _relation_rows(self):
        return [
            [self.orders[i] if j == i else 0 for j in range(self.k)]
            for i in range(self.k)
        ]

    def subgroup_lattice(self, gens):
        """HNF basis of the full preimage lattice of <gens> in Z^k."""
        rows = [list(g) for g in gens] + self._relation_rows()
        return la.hnf_lattice(rows)

    def subgroup_order(self, gens):
        H = self.subgroup_lattice(gens)
        idx = 1
        for i in range(self.k):
            idx *= H[i][i]
        # |<gens>| = |G| / [Z^k-lattice index]
        assert self.order() % idx == 0
        return self.order() // idx

    def member_solve(self, gens, target):
        """Exponents c with sum c_i gens_i = target in G, or None.

        Solved as an integer system: target = c * gens + slack * relations.
        """
        rows = [list(g) for g in gens] + self._relation_rows()
        sol = la.solve_int_left(rows, self.reduce(target))
        if sol is None:
            return None
        coeffs = sol[: len(gens)]
        check = self.zero()
        for c, g in zip(coeffs, gens):
            check = self.add(check, self.scale(c, self.reduce(g)))
        assert check == self.reduce(target)
        return coeffs

    def contains(self, gens, target):
        return self.member_solve(gens, target) is not None

    def quotient(self, gens):
        """Presentation of G / <gens>.

        Returns (Q, pi) with Q a FinAbGroup and pi a function mapping an
        exponent vector of G to coordinates in Q.
        """
        rows = [list(g) for g in gens] + self._relation_rows()
        H = la.hnf_lattice(rows)
        D, U, V = la.snf_with_transform(H)
        # Z^k / rowlattice(H): x -> x V gives coordinates in sum Z/D_ii;
        # row lattice of H V equals that of U^{-1} D, i.e. of D
        dd = [D[i][i] for i in range(self.k)]

        def pi(v):
            w = [
                sum(v[i] * V[i][j] for i in range(self.k)) % dd[j]
                if dd[j]
                else sum(v[i] * V[i][j] for i in range(self.k))
                for j in range(self.k)
            ]
            return [w[j] for j in range(self.k) if dd[j] != 1]

        q_orders = [d for d in dd if d != 1]
        return FinAbGroup(q_orders), pi


def cyclic_decomposition(orders):
    """Invariant factors of a direct sum of cyclic groups."""
    if not orders:
        return []
    rel = [[orders[i] if j == i else 0 for j in range(len(orders))] for i in range(len(orders))]
    diag = la.snf_diagonal(rel)
    return [d for d in diag if d != 1]
