import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from tracenorm import matcore as mc
from tracenorm.extremal import e_matrix, herm_extremal, jn_minus_in, ones_matrix
from tracenorm.spectral import eigh, is_psd

from _support import gram, random_herm, random_unitary, rng

finite = st.floats(-1e3, 1e3, allow_nan=False, allow_infinity=False)


# construction ---------------------------------------------------------------

def test_make_matrix_accepts_real_symmetric():
    A = mc.make_matrix("real", [[0, 1], [1, 0]])
    assert A.kind is mc.Kind.REAL
    assert A.n == 2


def test_make_matrix_accepts_two_by_two_e():
    A = mc.make_matrix("hermitian", [[0, -1j], [1j, 0]])
    assert A == e_matrix(2)


def test_make_matrix_rejects_asymmetric():
    with pytest.raises(mc.SymmetryViolation):
        mc.make_matrix("real", [[0, 1], [2, 0]])


@pytest.mark.parametrize(
    "entries, exc",
    [
        ([[1, 2, 3]], mc.NonSquareError),
        ([[0, np.nan], [np.nan, 0]], mc.NonFiniteError),
        ([[0, np.inf], [np.inf, 0]], mc.NonFiniteError),
        (np.zeros((0, 0)), mc.NonSquareError),
    ],
)
def test_make_matrix_rejects_bad_grids(entries, exc):
    with pytest.raises(exc):
        mc.make_matrix("real", entries)


def test_real_kind_rejects_complex_entries():
    with pytest.raises(mc.SymmetryViolation):
        mc.make_matrix("real", [[0, 1j], [-1j, 0]])


def test_hermitian_rejects_complex_diagonal():
    with pytest.raises(mc.SymmetryViolation):
        mc.make_matrix("hermitian", [[1j, 0], [0, 0]])


def test_from_upper_mirrors_and_is_immutable():
    A = mc.from_upper("hermitian", [[1, 2 + 1j], [99, 3]])
    assert A.entries[1, 0] == 2 - 1j
    with pytest.raises(ValueError):
        A.entries[0, 0] = 5


def test_unknown_kind():
    with pytest.raises(ValueError):
        mc.Kind.coerce("complex")


@settings(max_examples=60, deadline=None)
@given(arrays(np.complex128, (4, 4), elements=st.complex_numbers(max_magnitude=1e3, allow_nan=False, allow_infinity=False)))
def test_constructed_matrices_are_exactly_hermitian(raw):
    A = mc.from_upper("hermitian", raw)
    assert np.array_equal(A.entries, A.entries.conj().T)


# norms ----------------------------------------------------------------------

def test_entrywise_l1_examples():
    assert mc.entrywise_l1(jn_minus_in(3)) == 6
    assert mc.entrywise_l1(mc.make_matrix("real", np.zeros((3, 3)))) == 0


def test_entrywise_l1_of_hermitian_extremal_matches_gamma():
    # n^2 gamma_3 with gamma_3 = 2 / (3 tan(pi/6)) = 2/sqrt(3)
    expected = 9 * 2 / (3 * math.tan(math.pi / 6))
    direct = sum(abs(1 - np.exp(2j * math.pi * (i - j) / 3)) for i in range(3) for j in range(3))
    assert mc.entrywise_l1(herm_extremal(3)) == pytest.approx(expected, rel=1e-12)
    assert expected == pytest.approx(direct, rel=1e-12)
    assert expected == pytest.approx(10.3923, abs=1e-4)


def test_entrywise_max_examples():
    assert mc.entrywise_max(ones_matrix(5)) == 1
    assert mc.entrywise_max(mc.scale(jn_minus_in(4), 3)) == 3
    for n in (2, 5, 9):
        assert mc.entrywise_max(e_matrix(n)) == pytest.approx(1.0, abs=1e-15)


def test_offdiag_max_ignores_diagonal():
    A = mc.from_upper("real", [[7, 0.5], [0, -9]])
    assert mc.offdiag_max(A) == 0.5


@settings(max_examples=80, deadline=None)
@given(arrays(np.float64, (5, 5), elements=finite), st.floats(-50, 50, allow_nan=False))
def test_norms_are_absolutely_homogeneous(raw, c):
    A = mc.from_upper("real", raw)
    cA = mc.scale(A, c)
    assert mc.entrywise_l1(cA) == pytest.approx(abs(c) * mc.entrywise_l1(A), rel=1e-14, abs=1e-300)
    assert mc.entrywise_max(cA) == pytest.approx(abs(c) * mc.entrywise_max(A), rel=1e-14, abs=1e-300)


# inner products -------------------------------------------------------------

def test_frobenius_inner_examples():
    I3 = mc.make_matrix("real", np.eye(3))
    assert mc.frobenius_inner(I3, I3) == 3
    X = mc.make_matrix("real", [[0, 1], [1, 0]])
    assert mc.frobenius_inner(ones_matrix(2), X) == 2


def test_inner_with_ones_vanishes_when_rows_sum_to_zero():
    v = np.array([1.0, 1.0, -1.0, -1.0])
    B = mc.from_upper("real", np.outer(v, v))
    assert mc.frobenius_inner(ones_matrix(4), B) == 0


def test_frobenius_inner_dimension_mismatch():
    with pytest.raises(mc.DimensionMismatch):
        mc.frobenius_inner(ones_matrix(2), ones_matrix(3))


@pytest.mark.parametrize("seed", range(20))
def test_inner_self_is_squared_frobenius(seed):
    A = random_herm(rng(seed), 6)
    val = mc.frobenius_inner(A, A)
    assert val >= 0
    assert val == pytest.approx(float((np.abs(A.entries) ** 2).sum()), rel=1e-12)


@pytest.mark.parametrize("seed", range(20))
def test_inner_is_unitarily_invariant(seed):
    g = rng(seed)
    A, B = random_herm(g, 5), random_herm(g, 5)
    U = eigh(random_herm(g, 5)).eigenvectors
    assert np.allclose(U.conj().T @ U, np.eye(5), atol=1e-12)
    UA = mc.from_upper("hermitian", U.conj().T @ A.entries @ U)
    UB = mc.from_upper("hermitian", U.conj().T @ B.entries @ U)
    ref = mc.frobenius_inner(A, B)
    assert mc.frobenius_inner(UA, UB) == pytest.approx(ref, rel=1e-10, abs=1e-10 * mc.frobenius_norm(A) * mc.frobenius_norm(B))


# hadamard and diagonal helpers ----------------------------------------------

def test_hadamard_with_ones_is_identity():
    A = random_herm(rng(1), 4)
    assert mc.hadamard(A, ones_matrix(4)) == A


def test_hadamard_idempotent_on_zero_one():
    A = jn_minus_in(2)
    assert mc.hadamard(A, A) == A


@pytest.mark.parametrize("seed", range(30))
def test_hadamard_of_psd_is_psd(seed):
    g = rng(seed)
    complex_ = bool(seed % 2)
    kind = "hermitian" if complex_ else "real"
    A = mc.from_upper(kind, gram(g, 4, 2, complex_))
    B = mc.from_upper(kind, gram(g, 4, 3, complex_))
    C = mc.hadamard(A, B)
    assert is_psd(C, tol=1e-10 * mc.frobenius_norm(C))


def test_diag_helpers():
    J = ones_matrix(3)
    assert np.array_equal(mc.diag_vector(J), [1, 1, 1])
    assert mc.subtract_diag(J, [1, 1, 1]) == jn_minus_in(3)
    assert mc.is_zero_diag(jn_minus_in(3), 0)
    assert not mc.is_zero_diag(J, 0)
    assert mc.zero_diagonal_part(J) == jn_minus_in(3)
    with pytest.raises(mc.DimensionMismatch):
        mc.subtract_diag(J, [1, 1])


def test_is_zero_diag_tolerance():
    A = mc.from_upper("real", [[1e-13, 1], [1, 0]])
    assert not mc.is_zero_diag(A)
    assert mc.is_zero_diag(A, 1e-12)


def test_add_and_conjugate():
    A = e_matrix(3)
    assert mc.add(A, mc.conjugate(A)) == mc.make_matrix("hermitian", np.zeros((3, 3)))
    U = random_unitary(rng(0), 3)
    assert np.allclose(U.conj().T @ U, np.eye(3))
