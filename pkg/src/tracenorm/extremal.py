"""Matrices attaining (or testing) the bounds with equality.

These serve as ground-truth fixtures for the checkers and solvers.
"""

from __future__ import annotations

import numpy as np

from .matcore import Kind, OrderTooSmall, SquareMatrix, TraceNormError, from_upper

__all__ = [
    "UnbalancedVector",
    "OddOrder",
    "roots_of_unity",
    "jn_minus_in",
    "ones_matrix",
    "real_equality_family",
    "herm_extremal",
    "e_matrix",
    "e_matrix_eigenvalues",
    "herm_dual_extremal",
    "block_identity_example",
]


class UnbalancedVector(TraceNormError):
    pass


class OddOrder(TraceNormError):
    pass


def _need(n, least=2):
    if n < least:
        raise OrderTooSmall(f"need n >= {least}, got {n}")


def roots_of_unity(n: int) -> np.ndarray:
    """``alpha_k = exp(2 pi i (k-1) / n)``, k = 1..n, built from angles."""
    angles = 2.0 * np.pi * np.arange(n) / n
    return np.cos(angles) + 1j * np.sin(angles)


def ones_matrix(n: int) -> SquareMatrix:
    return from_upper(Kind.REAL, np.ones((n, n)))


def jn_minus_in(n: int) -> SquareMatrix:
    _need(n)
    return from_upper(Kind.REAL, np.ones((n, n)) - np.eye(n))


def real_equality_family(v) -> SquareMatrix:
    """``1 1^T - v v^T`` for a balanced sign vector ``v``."""
    v = np.asarray(v, dtype=float)
    n = v.size
    if n % 2:
        raise OddOrder("a balanced +-1 vector needs even length")
    if not np.all(np.abs(v) == 1) or v.sum() != 0:
        raise UnbalancedVector("v must have entries +-1 summing to 0")
    return from_upper(Kind.REAL, 1.0 - np.outer(v, v))


def herm_extremal(n: int) -> SquareMatrix:
    """``1 1^* - alpha alpha^*`` with alpha the n-th roots of unity."""
    _need(n)
    a = roots_of_unity(n)
    arr = 1.0 - np.outer(a, a.conj())
    np.fill_diagonal(arr, 0.0)
    return from_upper(Kind.HERMITIAN, arr)


def e_matrix(n: int) -> SquareMatrix:
    """``E_ij = i * sgn(i - j)``: Hermitian, zero diagonal, unit off-diagonal."""
    _need(n)
    i, j = np.indices((n, n))
    return from_upper(Kind.HERMITIAN, 1j * np.sign(i - j))


def e_matrix_eigenvalues(n: int) -> np.ndarray:
    """Closed-form spectrum ``cot((2k - 1) pi / 2n)``, k = 1..n (descending)."""
    k = np.arange(1, n + 1)
    return 1.0 / np.tan((2 * k - 1) * np.pi / (2 * n))


def herm_dual_extremal(n: int) -> SquareMatrix:
    """``a_ij = -i zeta^(i-j) sgn(i-j)`` with ``zeta = exp(i pi / n)``.

    Unitarily similar to ``-E`` through ``diag(zeta, ..., zeta^n)``.
    """
    _need(n)
    i, j = np.indices((n, n))
    ang = np.pi * (i - j) / n
    arr = -1j * (np.cos(ang) + 1j * np.sin(ang)) * np.sign(i - j)
    return from_upper(Kind.HERMITIAN, arr)


def block_identity_example(n: int, off_block: str = "ones") -> SquareMatrix:
    """Two-block real fixture ``[[0, X], [X, 0]]`` with ``X`` of order n/2.

    With ``off_block="ones"`` (``X = J``) the zero-diagonal part of the
    certificate ``1 1^T - v v^T`` (v = first half +1, second half -1) is
    matched sign for sign, so the nearest diagonal matrix lies at spectral
    distance exactly ``n/2``.  ``off_block="identity"`` (``X = I``) is kept
    for comparison; its distance is at most 1.  Both agree at ``n = 2``.
    """
    if n % 2:
        raise OddOrder("block fixture needs even n")
    _need(n)
    h = n // 2
    if off_block == "ones":
        x = np.ones((h, h))
    elif off_block == "identity":
        x = np.eye(h)
    else:
        raise ValueError(f"off_block must be 'ones' or 'identity', got {off_block!r}")
    z = np.zeros((h, h))
    return from_upper(Kind.REAL, np.block([[z, x], [x, z]]))
