import numpy as np
import pytest

from pcortho import (
    DegenerateElement,
    FrobeniusInner,
    NotSymmetric,
    ShapeMismatch,
    SkewMatrix,
    VectorMetricInner,
    WeightedFrobeniusInner,
    check_positive_definite,
    f_n,
    f_pair_w,
    frobenius,
    gram_schmidt,
    induced_vector_ip,
    metric_matrix,
    w_frobenius,
)
from conftest import random_pd

N3 = SkewMatrix(3, [1.0, -1.0, 1.0]).dense()
E1 = np.array([[0, 1, 1], [-1, 0, 0], [-1, 0, 0]], dtype=float)
E2 = np.array([[0, 0, 1], [0, 0, 1], [-1, -1, 0]], dtype=float)
C1 = np.array([[0, 1, 1], [-1, 0, 0], [-1, 0, 0]], dtype=float)
C2 = np.array([[0, -1, 1], [1, 0, 2], [-1, -2, 0]], dtype=float)


def test_frobenius_fixtures():
    assert frobenius(N3, N3) == 6.0
    assert frobenius(C1, C1) == 4.0
    assert frobenius(C2, C2) == 12.0
    assert frobenius(N3, np.zeros((3, 3))) == 0.0


def test_frobenius_shape_mismatch():
    with pytest.raises(ShapeMismatch):
        frobenius(np.ones((2, 2)), np.ones((3, 3)))


def test_skew_frobenius_doubles_upper_part(rng):
    a = rng.normal(size=(4, 4))
    B = SkewMatrix.from_dense(a).dense()
    C = SkewMatrix.from_dense(rng.normal(size=(4, 4))).dense()
    upper = 2 * sum(B[i, j] * C[i, j] for i in range(4) for j in range(i + 1, 4))
    assert np.isclose(frobenius(B, C), upper, rtol=1e-13)


def test_w_frobenius_identity_reduces_to_frobenius(rng):
    for n in range(2, 21):
        a, b = rng.normal(size=(n, n)), rng.normal(size=(n, n))
        assert np.isclose(w_frobenius(a, b, np.eye(n)), frobenius(a, b), rtol=1e-13)


def test_w_frobenius_trace_shift(rng):
    # tr(X W Y^T) = <XW, Y>
    for _ in range(20):
        X, Y = rng.normal(size=(4, 4)), rng.normal(size=(4, 4))
        W = random_pd(rng, 4)
        assert np.isclose(w_frobenius(X, Y, W), frobenius(X @ W, Y), rtol=1e-12)


def test_w_frobenius_positive(rng):
    for _ in range(20):
        W = random_pd(rng, 5)
        A = rng.normal(size=(5, 5))
        assert w_frobenius(A, A, W) > 0


def test_f_pair_w_vanishes_on_ones():
    for n in (2, 4, 7):
        one = np.ones(n)
        W = np.eye(n)
        assert f_pair_w(one, one, W) == 0.0


def test_f_pair_w_identity_example():
    v, w = np.array([1.0, -1.0, 0.0]), np.array([1.0, 1.0, -2.0])
    assert f_pair_w(v, w, np.eye(3)) == 0.0


def test_f_pair_w_matches_matrix_product(rng):
    for n in (3, 5, 8):
        for _ in range(30):
            v, w = rng.normal(size=n), rng.normal(size=n)
            W = random_pd(rng, n)
            lhs = f_pair_w(v, w, W)
            rhs = w_frobenius(f_n(v).dense(), f_n(w).dense(), W)
            assert np.isclose(lhs, rhs, rtol=1e-10, atol=1e-10)


def test_f_pair_w_identity_reduction(rng):
    for _ in range(20):
        n = int(rng.integers(2, 9))
        v, w = rng.normal(size=n), rng.normal(size=n)
        expected = 2 * n * (v @ w) - 2 * v.sum() * w.sum()
        assert np.isclose(f_pair_w(v, w, np.eye(n)), expected, rtol=1e-12, atol=1e-12)


def test_f_pair_w_metric_form_on_hyperplane(rng):
    # for v, w orthogonal to the all-ones vector: v^T M w
    for _ in range(20):
        n = int(rng.integers(3, 8))
        W = random_pd(rng, n)
        M = metric_matrix(W)
        v, w = rng.normal(size=n), rng.normal(size=n)
        v -= v.mean()
        w -= w.mean()
        assert np.isclose(f_pair_w(v, w, W), v @ M @ w, rtol=1e-10, atol=1e-10)


def test_metric_matrix_fixtures():
    assert np.array_equal(metric_matrix(np.eye(3)), 6 * np.eye(3))
    M = metric_matrix(np.diag([1.0, 2.0, 3.0]))
    assert np.array_equal(M, np.diag([9.0, 12.0, 15.0]))


def test_metric_matrix_structure(rng):
    W = random_pd(rng, 5)
    M = metric_matrix(W)
    c = float(np.ones(5) @ W @ np.ones(5))
    assert np.allclose(M - 5 * W, c * np.eye(5), atol=1e-12)
    assert check_positive_definite(M)


def test_induced_ip_ones():
    fr = FrobeniusInner()
    for n in (2, 3, 6):
        assert induced_vector_ip(np.ones(n), np.ones(n), fr) == n * n


def test_induced_ip_example_zero():
    fr = FrobeniusInner()
    assert induced_vector_ip([1, -1, 0], [1, 1, -2], fr) == 0.0


def test_induced_ip_reduces_on_hyperplane(rng):
    fr = FrobeniusInner()
    x, y = rng.normal(size=4), rng.normal(size=4)
    x -= x.mean()
    y -= y.mean()
    fx, fy = f_n(x).dense(), f_n(y).dense()
    assert np.isclose(induced_vector_ip(x, y, fr), frobenius(fx, fy), rtol=1e-12, atol=1e-12)


def test_induced_ip_positive_definite(rng):
    fr = FrobeniusInner()
    for n in (2, 3, 5):
        for _ in range(1000):
            x = rng.normal(size=n)
            assert induced_vector_ip(x, x, fr) > 0


def test_induced_ip_bilinear(rng):
    # additivity in the first slot (the display with the missing operator)
    fr = FrobeniusInner()
    x, y, z = (rng.normal(size=4) for _ in range(3))
    lhs = induced_vector_ip(x + z, y, fr)
    rhs = induced_vector_ip(x, y, fr) + induced_vector_ip(z, y, fr)
    assert np.isclose(lhs, rhs, rtol=1e-12, atol=1e-12)
    assert np.isclose(induced_vector_ip(2.0 * x, y, fr),
                      2.0 * induced_vector_ip(x, y, fr), rtol=1e-12, atol=1e-12)
    assert np.isclose(induced_vector_ip(x, y, fr), induced_vector_ip(y, x, fr), rtol=1e-12)


def test_gram_schmidt_recovers_orthogonal_pair():
    out = gram_schmidt([E1, E2], FrobeniusInner())
    assert np.allclose(out[0], C1, atol=1e-14)
    # second residual equals C2 up to a positive scalar
    scale = out[1][0, 2] / C2[0, 2]
    assert scale > 0
    assert np.allclose(out[1], scale * C2, atol=1e-13)
    assert np.isclose(scale, 0.5)


def test_gram_schmidt_orthogonal_input_unchanged():
    out = gram_schmidt([C1, C2], FrobeniusInner())
    assert np.array_equal(out[0], C1)
    assert np.array_equal(out[1], C2)


def test_gram_schmidt_dependent_input():
    v = np.array([1.0, 2.0, 3.0])
    with pytest.raises(DegenerateElement):
        gram_schmidt([v, v], VectorMetricInner(np.eye(3)))


def test_gram_schmidt_orthogonality_and_span(rng):
    ip = WeightedFrobeniusInner(random_pd(rng, 4))
    elems = [rng.normal(size=(4, 4)) for _ in range(5)]
    out = gram_schmidt(elems, ip)
    for i in range(5):
        ni = np.sqrt(ip(out[i], out[i]))
        for j in range(i):
            nj = np.sqrt(ip(out[j], out[j]))
            assert abs(ip(out[i], out[j])) <= 1e-10 * ni * nj
    # span preserved: each input reconstructs from the outputs
    for e in elems:
        recon = sum((ip(e, u) / ip(u, u)) * u for u in out)
        assert np.max(np.abs(recon - e)) <= 1e-10


def test_check_positive_definite():
    assert check_positive_definite(np.eye(4))
    assert not check_positive_definite(np.diag([1.0, -1.0]))
    assert check_positive_definite([[2.0, 1.0], [1.0, 2.0]])
    with pytest.raises(NotSymmetric):
        check_positive_definite([[1.0, 2.0], [0.0, 1.0]])


def test_inner_product_symmetry(rng):
    W = random_pd(rng, 4)
    a, b = rng.normal(size=(4, 4)), rng.normal(size=(4, 4))
    assert np.isclose(w_frobenius(a, b, W), w_frobenius(b, a, W), rtol=1e-12)
    mip = VectorMetricInner(metric_matrix(W))
    x, y = rng.normal(size=4), rng.normal(size=4)
    assert np.isclose(mip(x, y), mip(y, x), rtol=1e-12)
