import itertools
import random

from zsimilar.abgroup import FinAbGroup, cyclic_decomposition


def brute_subgroup(G, gens):
    seen = {tuple(G.zero())}
    frontier = [G.zero()]
    while frontier:
        nxt = []
        for v in frontier:
            for g in gens:
                w = G.add(v, G.reduce(g))
                if tuple(w) not in seen:
                    seen.add(tuple(w))
                    nxt.append(w)
        frontier = nxt
    return seen


def test_subgroup_order_brute():
    rng = random.Random(1)
    for _ in range(30):
        orders = [rng.choice([2, 3, 4, 5, 6, 8]) for _ in range(rng.randrange(1, 4))]
        G = FinAbGroup(orders)
        gens = [[rng.randrange(d) for d in orders] for _ in range(rng.randrange(0, 3))]
        assert G.subgroup_order(gens) == len(brute_subgroup(G, gens))


def test_membership_brute():
    rng = random.Random(2)
    for _ in range(20):
        orders = [rng.choice([2, 3, 4, 6]) for _ in range(rng.randrange(1, 4))]
        G = FinAbGroup(orders)
        gens = [[rng.randrange(d) for d in orders] for _ in range(rng.randrange(1, 3))]
        sub = brute_subgroup(G, gens)
        for target in itertools.product(*[range(d) for d in orders]):
            got = G.member_solve(gens, list(target))
            assert (got is not None) == (tuple(target) in sub)


def test_member_solve_verifies():
    G = FinAbGroup([4, 6])
    gens = [[2, 0], [0, 3]]
    co = G.member_solve(gens, [2, 3])
    assert co is not None
    assert G.member_solve(gens, [1, 0]) is None


def test_quotient_presentation():
    rng = random.Random(3)
    for _ in range(20):
        orders = [rng.choice([2, 3, 4, 6, 9]) for _ in range(rng.randrange(1, 4))]
        G = FinAbGroup(orders)
        gens = [[rng.randrange(d) for d in orders] for _ in range(rng.randrange(0, 3))]
        Q, pi = G.quotient(gens)
        assert Q.order() * G.subgroup_order(gens) == G.order()
        # pi is a homomorphism killing exactly the subgroup
        sub = brute_subgroup(G, gens)
        for v in itertools.product(*[range(d) for d in orders]):
            img = pi(list(v))
            assert Q.is_zero(img) == (tuple(v) in sub)
        a = [rng.randrange(d) for d in orders]
        b = [rng.randrange(d) for d in orders]
        assert pi(G.add(a, b)) == Q.add(pi(a), pi(b))


def test_cyclic_decomposition():
    assert cyclic_decomposition([2, 3]) == [6]
    assert cyclic_decomposition([2, 4]) == [2, 4]
    assert cyclic_decomposition([6, 4]) == [2, 12]
    assert cyclic_decomposition([1, 1]) == []
    assert sorted(cyclic_decomposition([2, 3, 4, 5])) == [2, 60]
