from fractions import Fraction

import pytest

from zsimilar.nfideals import (
    FracIdeal,
    colon,
    coprime_representative,
    exact_valuation_element,
    factor_ideal,
    fractional_ideal,
    ideal_from_elements,
    int_ideal,
    prime_decomposition,
    principal_ideal,
    unit_ideal,
    weak_approximation,
)
from zsimilar.numfield import ring_of_integers


def gaussian():
    return ring_of_integers([1, 0, 1])


def qsqrtm5():
    return ring_of_integers([5, 0, 1])


def emultiset(primes):
    return sorted((P.e, P.f) for P in primes)


def test_gaussian_split_prime_five():
    K = gaussian()
    ps = prime_decomposition(K, 5)
    assert emultiset(ps) == [(1, 1), (1, 1)]
    assert all(P.norm() == 5 for P in ps)
    assert ps[0] != ps[1]
    assert (ps[0] + ps[1]).norm() == 1


def test_gaussian_ramified_two():
    K = gaussian()
    ps = prime_decomposition(K, 2)
    assert emultiset(ps) == [(2, 1)]
    P = ps[0]
    assert P.norm() == 2
    assert P.contains(K.elt([1, 1]))
    assert P.power(2) == principal_ideal(K, 2)


def test_sqrtm5_eleven_inert():
    # 6 is not a square mod 11, so x^2 + 5 stays irreducible
    K = qsqrtm5()
    ps = prime_decomposition(K, 11)
    assert emultiset(ps) == [(1, 2)]
    assert ps[0].norm() == 121


def test_factor_six_in_gaussian():
    # 3 stays inert, so (6) is p2^2 times a norm-9 prime; norm check 36
    K = gaussian()
    fac = factor_ideal(principal_ideal(K, 6))
    assert sorted(e for _, e in fac) == [1, 2]
    assert sorted(P.norm() ** e for P, e in fac) == [4, 9]
    prod = unit_ideal(K)
    for P, e in fac:
        prod = prod * P.power(e)
    assert prod == principal_ideal(K, 6)


def test_factor_ten_in_gaussian():
    # the p2^2 * p5 * p5' pattern with exponents (2, 1, 1)
    K = gaussian()
    fac = factor_ideal(principal_ideal(K, 10))
    assert sorted(e for _, e in fac) == [1, 1, 2]
    assert sorted(P.norm() for P, e in fac) == [2, 5, 5]


@pytest.mark.parametrize("m", [4, 9, 10, 12, 30])
def test_factor_reassembly_sqrtm5(m):
    K = qsqrtm5()
    a = principal_ideal(K, m)
    prod = unit_ideal(K)
    for P, e in factor_ideal(a):
        prod = prod * P.power(e)
    assert prod == a


def test_decomposition_cached():
    K = gaussian()
    a = prime_decomposition(K, 5)
    b = prime_decomposition(K, 5)
    assert a is b


def test_hard_path_matches_gaussian_splitting():
    # x^2 + 5336100 defines Q(i) with index 2310 = 2*3*5*7*11, so every
    # one of those primes takes the O/pO splitting path; the (e, f) data
    # must match what x^2 + 1 gives directly.
    K1 = gaussian()
    K2 = ring_of_integers([5336100, 0, 1])
    assert K2.index == 2310
    for p in (2, 3, 5, 7, 11):
        d1 = emultiset(prime_decomposition(K1, p))
        d2 = emultiset(prime_decomposition(K2, p))
        assert d1 == d2, p
    assert emultiset(prime_decomposition(K2, 2)) == [(2, 1)]
    assert emultiset(prime_decomposition(K2, 3)) == [(1, 2)]
    assert emultiset(prime_decomposition(K2, 5)) == [(1, 1), (1, 1)]


def test_cubic_index_prime_decomposition():
    # disc(f) = -8575 = -5^2 * 7^3, index 7, disc(K) = -175; the tame
    # different forces one e=2 prime at 7 and total ramification at 5
    K = ring_of_integers([-1, 13, 2, 1])
    assert K.index == 7
    assert emultiset(prime_decomposition(K, 7)) == [(1, 1), (2, 1)]
    assert emultiset(prime_decomposition(K, 5)) == [(3, 1)]
    for P in prime_decomposition(K, 7):
        assert P.val_element(K.coerce(7)) == P.e


def test_valuation_multiplicative():
    K = qsqrtm5()
    P = prime_decomposition(K, 2)[0]
    xs = [K.elt([1, 1]), K.elt([2, 0]), K.elt([3, 1]), K.elt([-1, 2])]
    for x in xs:
        for y in xs:
            assert P.val_element(x * y) == P.val_element(x) + P.val_element(y)


def test_valuation_of_fraction():
    K = gaussian()
    P = prime_decomposition(K, 2)[0]
    x = K.elt([Fraction(1, 2), Fraction(1, 2)])  # (1+i)/2
    assert P.val_element(x) == -1


def test_norm_multiplicative_and_module():
    K = qsqrtm5()
    a = ideal_from_elements(K, [2, K.elt([1, 1])])
    b = ideal_from_elements(K, [3, K.elt([1, 1])])
    assert (a * b).norm() == a.norm() * b.norm()
    assert a.is_module() and b.is_module() and (a * b).is_module()


def test_sum_intersect_product_identity():
    K = qsqrtm5()
    a = ideal_from_elements(K, [2, K.elt([1, 1])])
    b = ideal_from_elements(K, [3, K.elt([1, 1])])
    lhs = (a + b) * a.intersect(b)
    assert lhs == a * b
    c = principal_ideal(K, K.elt([1, 2]))
    lhs = (a + c) * a.intersect(c)
    assert lhs == a * c


def test_minimum():
    K = gaussian()
    assert int_ideal(K, 12).minimum() == 12
    P = prime_decomposition(K, 5)[0]
    assert P.minimum() == 5
    assert P.power(2).minimum() == 25


def test_colon_basics():
    K = qsqrtm5()
    two = int_ideal(K, 2)
    assert colon(two, two) == FracIdeal(K, unit_ideal(K))
    P = prime_decomposition(K, 2)[0]
    q = colon(two, P)
    assert q.is_integral()
    assert q.num.norm() == 4 // P.norm()  # N(pO)/N(P) = p^n / p^f


def test_inverse_cancels():
    K = qsqrtm5()
    P = prime_decomposition(K, 2)[0]
    inv = fractional_ideal(K, P).inverse()
    prod = inv * P
    assert prod == FracIdeal(K, unit_ideal(K))
    a = principal_ideal(K, K.elt([1, 3]))
    assert fractional_ideal(K, a).inverse() * a == FracIdeal(K, unit_ideal(K))


def test_fractional_ideal_factorization():
    K = gaussian()
    a = FracIdeal(K, principal_ideal(K, 3), 2)
    fac = factor_ideal(a)
    exps = sorted(e for _, e in fac)
    assert exps == [-2, 1]
    for P, e in fac:
        if e == 1:
            assert P.norm() == 9
        else:
            assert P.norm() == 2


def test_two_element_form():
    K = qsqrtm5()
    for p in (2, 3, 5, 11):
        for P in prime_decomposition(K, p):
            q, alpha = P.two_element(seed=3)
            assert q == p
            assert ideal_from_elements(K, [q, alpha]) == P


def test_exact_valuation_element():
    K = qsqrtm5()
    P2 = prime_decomposition(K, 2)[0]
    P3a, P3b = prime_decomposition(K, 3)
    x = exact_valuation_element(K, [(P2, 3), (P3a, 0), (P3b, 2)])
    assert P2.val_element(x) == 3
    assert P3a.val_element(x) == 0
    assert P3b.val_element(x) == 2
    assert x.is_integral()


def test_exact_valuation_rejects_duplicates():
    K = gaussian()
    P = prime_decomposition(K, 2)[0]
    with pytest.raises(AssertionError):
        exact_valuation_element(K, [(P, 1), (P, 2)])


def test_weak_approximation_postcondition():
    K = qsqrtm5()
    P2 = prime_decomposition(K, 2)[0]
    P3a, P3b = prime_decomposition(K, 3)
    a = P2.power(3) * P3b.power(2)
    b = int_ideal(K, 6)
    stats = {}
    x = weak_approximation(a, b, seed=7, stats=stats)
    assert P2.val_element(x) == 3
    assert P3a.val_element(x) == 0
    assert P3b.val_element(x) == 2
    assert a.contains(x)
    assert stats["calls"] == 1


def test_weak_approximation_trivial_ideal():
    K = gaussian()
    x = weak_approximation(unit_ideal(K), int_ideal(K, 10), seed=1)
    assert x == K.one()


def test_weak_approximation_degree_one_field():
    # degenerate field Q itself with a = (6), b = (10): x = 6 works
    K = ring_of_integers([0, 1])
    a = int_ideal(K, 6)
    b = int_ideal(K, 10)
    x = weak_approximation(a, b, seed=4)
    assert x == K.coerce(6)
    P2 = prime_decomposition(K, 2)[0]
    P5 = prime_decomposition(K, 5)[0]
    assert P2.val_element(x) == 1
    assert P5.val_element(x) == 0


def test_weak_approximation_unsplit_part():
    # 101 sits past the small-prime cut, forcing the sampling branch
    K = qsqrtm5()
    a = prime_decomposition(K, 2)[0]
    b = int_ideal(K, 101)
    stats = {}
    x = weak_approximation(a, b, seed=11, stats=stats)
    assert a.contains(x)
    for P in prime_decomposition(K, 101):
        assert P.val_element(x) == 0
    assert stats.get("retries", 0) >= 0


def test_uniformizer_example_gaussian():
    K = gaussian()
    P = prime_decomposition(K, 2)[0]
    assert P.val_element(K.elt([1, 1])) == 1  # 1 + i


def test_coprime_representative_nonprincipal_class():
    K = qsqrtm5()
    P2 = prime_decomposition(K, 2)[0]
    m = int_ideal(K, 6)
    x = coprime_representative(P2, m, seed=5)
    moved_num = principal_ideal(K, x * 2) * P2  # clear the denominator 2
    moved = FracIdeal(K, moved_num, 2)
    assert moved.is_integral()
    assert moved.num.is_coprime_to(m)


def test_coprime_representative_integer_ring():
    # a = b = (2) in Z: x has v2(x) = -1, and x*a = O is coprime to (2)
    K = ring_of_integers([0, 1])
    two = int_ideal(K, 2)
    x = coprime_representative(two, two, seed=1)
    P2 = prime_decomposition(K, 2)[0]
    assert P2.val_element(x) == -1


def test_coprime_representative_fractional_input():
    K = gaussian()
    a = FracIdeal(K, prime_decomposition(K, 5)[0], 3)
    m = int_ideal(K, 30)
    x = coprime_representative(a, m, seed=2)
    d = 1
    for c in x.to_ibasis():
        d = d * c.denominator // __import__("math").gcd(d, c.denominator)
    moved = FracIdeal(K, principal_ideal(K, x * d) * a.num, d * a.den)
    assert moved.is_integral()
    assert moved.num.is_coprime_to(m)
