from fractions import Fraction

import pytest

from zsimilar import polys
from zsimilar.intervals import Iv, civ_poly_eval, log_frac
from zsimilar.latred import cholesky_q, qform_value
from zsimilar.nfembed import (
    Embeddings,
    PrecisionError,
    certify_complex_roots,
    t2_gram_rational_majorant,
    t2_gram_rational_minorant,
)
from zsimilar.numfield import ring_of_integers


def iv_det(M):
    # Laplace expansion, fine at the sizes used here
    n = len(M)
    if n == 1:
        return M[0][0]
    acc = Iv(0)
    for j in range(n):
        minor = [row[:j] + row[j + 1 :] for row in M[1:]]
        term = M[0][j] * iv_det(minor)
        acc = acc + (term if j % 2 == 0 else -term)
    return acc


def test_gaussian_box_is_i():
    boxes = certify_complex_roots([1, 0, 1], 1, 40)
    assert len(boxes) == 1
    b = boxes[0]
    assert b.re.contains(0)
    assert b.im.contains(1)
    assert b.width() <= Fraction(1, 1 << 40)


def test_cube_root_field_places():
    K = ring_of_integers([-2, 0, 0, 1])
    emb = Embeddings(K, 40)
    assert len(emb.real) == 1 and len(emb.cplx) == 1
    r = emb.real[0]
    assert r.lo ** 3 <= 2 <= r.hi ** 3
    box = emb.cplx[0]
    assert box.im.lo > 0
    f = [Fraction(c) for c in K.f]
    assert civ_poly_eval(f, box).contains_zero()


def test_eighth_roots_of_unity_boxes():
    boxes = certify_complex_roots([1, 0, 0, 0, 1], 2, 40)
    assert len(boxes) == 2
    # sorted by real part: e^{3i pi/4} then e^{i pi/4}
    assert boxes[0].re.hi < 0 < boxes[1].re.lo
    for b in boxes:
        assert b.im.lo > 0
        assert civ_poly_eval([Fraction(1), 0, 0, 0, Fraction(1)], b).contains_zero()
    assert boxes[0].re.intersect(boxes[1].re) is None


def test_real_quadratic_norm_product():
    K = ring_of_integers([-2, 0, 1])
    emb = Embeddings(K, 50)
    th = K.gen()
    prod = emb.eval_real(th, 0) * emb.eval_real(th, 1)
    assert prod.contains(-2)
    assert prod.width() < Fraction(1, 1 << 30)


@pytest.mark.parametrize(
    "f",
    [
        [1, 0, 1],
        [-5, 0, 1],
        [-1, 13, 2, 1],
        [-2, 0, 0, 1],
        [1, 176, 88, 58, 1],
    ],
)
def test_t2_gram_det_is_abs_disc(f):
    K = ring_of_integers(f)
    emb = Embeddings.get(K, 60)
    G = emb.t2_gram(K.ibasis_elements())
    d = iv_det(G)
    assert d.contains(abs(K.disc))


def test_unit_log_vector_sums_to_zero():
    K = ring_of_integers([-2, 0, 1])
    emb = Embeddings.get(K, 60)
    u = K.from_ibasis([1, 1])  # 1 + sqrt(2)
    v = emb.log_abs_vector(u)
    assert len(v) == 2
    s = v[0] + v[1]
    assert s.contains(0)
    assert s.width() < Fraction(1, 1 << 30)


def test_unit_log_vector_norm_minus_one_case():
    K = ring_of_integers([-1, -15, 1])
    emb = Embeddings.get(K, 60)
    th = K.gen()
    assert th.norm() == -1
    v = emb.log_abs_vector(th)
    assert (v[0] + v[1]).contains(0)


def test_complex_log_vector_of_two():
    K = ring_of_integers([1, 0, 1])
    emb = Embeddings.get(K, 60)
    v = emb.log_abs_vector(K.coerce(2))
    assert len(v) == 1
    ln4 = log_frac(Fraction(4), 60)
    assert v[0].intersect(ln4) is not None
    assert v[0].width() < Fraction(1, 1 << 40)


def test_log_vector_rejects_zero():
    K = ring_of_integers([1, 0, 1])
    emb = Embeddings.get(K, 40)
    with pytest.raises(PrecisionError):
        emb.log_abs_vector(K.zero())


def test_embeddings_cache_reuse_and_growth():
    K = ring_of_integers([-1, 13, 2, 1])
    a = Embeddings.get(K, 30)
    b = Embeddings.get(K, 20)
    assert b is a
    c = Embeddings.get(K, 2 * a.prec + 10)
    assert c is not a
    assert c.prec >= 2 * a.prec + 10
    assert Embeddings.get(K, 5) is c


def test_rational_minorant_majorant_sandwich():
    K = ring_of_integers([-1, 13, 2, 1])
    emb = Embeddings.get(K, 60)
    G = emb.t2_gram(K.ibasis_elements())
    lo = t2_gram_rational_minorant(G)
    hi = t2_gram_rational_majorant(G)
    assert lo is not None
    cholesky_q(lo)  # still positive definite
    vecs = [(1, 0, 0), (0, 1, 0), (1, -1, 2), (3, 2, 1)]
    for x in vecs:
        assert qform_value(lo, x) <= qform_value(hi, x)
    for i in range(3):
        assert lo[i][i] <= G[i][i].hi
        assert hi[i][i] >= G[i][i].lo


def test_t2_diagonal_of_one_is_degree():
    for f in ([1, 0, 1], [-5, 0, 1], [-2, 0, 0, 1]):
        K = ring_of_integers(f)
        emb = Embeddings.get(K, 50)
        G = emb.t2_gram([K.one()])
        assert G[0][0].contains(K.n)
        assert G[0][0].width() < Fraction(1, 1 << 30)
