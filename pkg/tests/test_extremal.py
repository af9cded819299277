import math

import numpy as np
import pytest

from tracenorm import extremal as ex
from tracenorm.bounds import check_hermitian_bound, check_real_bound, gamma
from tracenorm.matcore import (
    OrderTooSmall,
    entrywise_l1,
    entrywise_max,
    frobenius_norm,
    from_upper,
    is_zero_diag,
    make_matrix,
)
from tracenorm.spectral import eigh, is_psd, spectral_norm, trace_norm

ZERO_DIAG = [ex.jn_minus_in, ex.herm_extremal, ex.e_matrix, ex.herm_dual_extremal, ex.block_identity_example]


@pytest.mark.parametrize("build", ZERO_DIAG)
@pytest.mark.parametrize("n", [2, 4, 6, 10])
def test_constructors_validate(build, n):
    A = build(n)
    assert make_matrix(A.kind, A.entries) == A
    assert is_zero_diag(A, 1e-15)


def test_roots_of_unity_from_angles():
    a = ex.roots_of_unity(6)
    assert np.allclose(a**6, 1, atol=1e-13)
    assert a[0] == 1
    assert np.allclose(np.abs(a), 1, atol=1e-15)


def test_jn_minus_in_examples():
    assert np.array_equal(ex.jn_minus_in(2).real, [[0, 1], [1, 0]])
    assert trace_norm(ex.jn_minus_in(3)) == pytest.approx(4, abs=1e-13)
    r = check_real_bound(ex.jn_minus_in(5))
    assert r.ratio == pytest.approx(2 / 5, rel=1e-12) and r.is_equality
    with pytest.raises(OrderTooSmall):
        ex.jn_minus_in(1)


def test_real_equality_family_examples():
    assert np.array_equal(ex.real_equality_family([1, -1]).real, [[0, 2], [2, 0]])
    A = ex.real_equality_family([1, 1, -1, -1])
    assert trace_norm(A) == pytest.approx(8, abs=1e-12)
    assert entrywise_l1(A) == 16


def test_real_equality_family_certificate_conditions():
    v = np.array([1, -1, 1, 1, -1, -1.0])
    B = from_upper("real", np.outer(v, v))
    assert is_psd(B, 1e-12)
    assert np.allclose(B.real @ np.ones(6), 0)
    assert np.array_equal(np.diag(B.real), np.ones(6))


@pytest.mark.parametrize("v, exc", [([1, 1], ex.UnbalancedVector), ([1, -1, 1], ex.OddOrder), ([2, -2], ex.UnbalancedVector)])
def test_real_equality_family_rejects(v, exc):
    with pytest.raises(exc):
        ex.real_equality_family(v)


def test_herm_extremal_examples():
    assert np.allclose(ex.herm_extremal(2).entries, [[0, 2], [2, 0]], atol=1e-15)
    assert np.allclose(eigh(ex.herm_extremal(3)).eigenvalues, [3, 0, -3], atol=1e-12)
    r = check_hermitian_bound(ex.herm_extremal(4))
    assert r.is_equality and r.ratio == pytest.approx(math.tan(math.pi / 8), rel=1e-12)


@pytest.mark.parametrize("n", range(2, 25))
def test_herm_extremal_norms(n):
    A = ex.herm_extremal(n)
    assert trace_norm(A) == pytest.approx(2 * n, rel=1e-9)
    assert entrywise_l1(A) == pytest.approx(n * n * gamma(n).value, rel=1e-9)


def test_e_matrix_examples():
    assert np.allclose(eigh(ex.e_matrix(2)).eigenvalues, [1, -1], atol=1e-15)
    assert spectral_norm(ex.e_matrix(3)) == pytest.approx(math.sqrt(3), rel=1e-13)
    for n in (2, 5, 11):
        assert entrywise_max(ex.e_matrix(n)) == pytest.approx(1, abs=1e-15)


@pytest.mark.parametrize("n", [2, 3, 4, 7, 16])
def test_e_matrix_eigenvalue_multiset(n):
    w = eigh(ex.e_matrix(n)).eigenvalues
    assert np.allclose(np.sort(w), np.sort(ex.e_matrix_eigenvalues(n)), atol=1e-9)


def test_herm_dual_extremal_examples():
    # a_12 = -i zeta^-1 sgn(-1) = i / i = 1 and a_21 = -i zeta = 1 with zeta = i
    assert np.allclose(ex.herm_dual_extremal(2).entries, [[0, 1], [1, 0]], atol=1e-15)
    assert spectral_norm(ex.herm_dual_extremal(2)) == pytest.approx(1, rel=1e-13)
    assert spectral_norm(ex.herm_dual_extremal(4)) == pytest.approx(1 / math.tan(math.pi / 8), rel=1e-12)
    assert spectral_norm(ex.herm_dual_extremal(4)) == pytest.approx(2.41421, abs=1e-5)


@pytest.mark.parametrize("n", [2, 3, 6, 9])
def test_herm_dual_extremal_unit_offdiagonal(n):
    a = np.abs(ex.herm_dual_extremal(n).entries)
    off = ~np.eye(n, dtype=bool)
    assert np.allclose(a[off], 1, atol=1e-14)


@pytest.mark.parametrize("n", [2, 3, 6])
def test_herm_dual_extremal_is_similar_to_minus_e(n):
    zeta = np.exp(1j * math.pi / n)
    D = np.diag(zeta ** np.arange(1, n + 1))
    rotated = D @ (-ex.e_matrix(n).entries) @ D.conj().T
    assert frobenius_norm(rotated - ex.herm_dual_extremal(n).entries) <= 1e-13 * n


def test_block_identity_examples():
    assert np.array_equal(ex.block_identity_example(2).real, [[0, 1], [1, 0]])
    A = ex.block_identity_example(4)
    assert entrywise_max(A) == 1
    assert np.array_equal(A.real[:2, 2:], np.ones((2, 2)))
    I = ex.block_identity_example(4, off_block="identity")
    assert I.real[0, 2] == 1 and I.real[1, 3] == 1 and I.real[0, 3] == 0
    with pytest.raises(ex.OddOrder):
        ex.block_identity_example(5)
    with pytest.raises(ValueError):
        ex.block_identity_example(4, off_block="zeros")
