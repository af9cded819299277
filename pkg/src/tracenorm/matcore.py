"""Dense real-symmetric / Hermitian matrices and their entrywise algebra.

Matrices are stored as full complex ``n x n`` grids.  ``Kind.REAL`` is only a
tag: the storage is still complex, with imaginary parts identically zero.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np

__all__ = [
    "Kind",
    "SquareMatrix",
    "TraceNormError",
    "NonSquareError",
    "SymmetryViolation",
    "NonFiniteError",
    "DimensionMismatch",
    "NonZeroDiagonal",
    "ZeroMatrixError",
    "WrongKind",
    "OrderTooSmall",
    "OrderTooLarge",
    "make_matrix",
    "from_upper",
    "as_array",
    "entrywise_l1",
    "entrywise_max",
    "offdiag_max",
    "frobenius_norm",
    "frobenius_inner",
    "hadamard",
    "conjugate",
    "scale",
    "add",
    "diag_vector",
    "subtract_diag",
    "zero_diagonal_part",
    "is_zero_diag",
]


class TraceNormError(ValueError):
    """Base class for all errors raised by this package."""


class NonSquareError(TraceNormError):
    pass


class SymmetryViolation(TraceNormError):
    pass


class NonFiniteError(TraceNormError):
    pass


class DimensionMismatch(TraceNormError):
    pass


class NonZeroDiagonal(TraceNormError):
    pass


class ZeroMatrixError(TraceNormError):
    pass


class WrongKind(TraceNormError):
    pass


class OrderTooSmall(TraceNormError):
    pass


class OrderTooLarge(TraceNormError):
    pass


class Kind(str, Enum):
    REAL = "real"
    HERMITIAN = "hermitian"

    @classmethod
    def coerce(cls, kind) -> "Kind":
        if isinstance(kind, cls):
            return kind
        try:
            return cls(str(kind).lower())
        except ValueError:
            raise TraceNormError(f"unknown matrix kind {kind!r}") from None


@dataclass(frozen=True, eq=False)
class SquareMatrix:
    """An immutable real-symmetric or Hermitian matrix.

    Use :func:`make_matrix` or :func:`from_upper` to build one; the
    constructor itself does not validate.
    """

    kind: Kind
    entries: np.ndarray

    @property
    def n(self) -> int:
        return self.entries.shape[0]

    @property
    def real(self) -> np.ndarray:
        """Real part of the entries (the whole matrix when ``kind`` is REAL)."""
        return self.entries.real.copy()

    def __array__(self, dtype=None, copy=None):
        if dtype is None:
            return self.entries.copy()
        return self.entries.astype(dtype)

    def __eq__(self, other):
        if not isinstance(other, SquareMatrix):
            return NotImplemented
        return self.kind == other.kind and np.array_equal(self.entries, other.entries)

    def __repr__(self):
        return f"SquareMatrix(kind={self.kind.value}, n={self.n})"


def _freeze(kind: Kind, arr: np.ndarray) -> SquareMatrix:
    arr = np.array(arr, dtype=np.complex128)
    arr.setflags(write=False)
    return SquareMatrix(kind, arr)


def _check_grid(entries) -> np.ndarray:
    arr = np.asarray(entries)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1] or arr.shape[0] == 0:
        raise NonSquareError(f"expected a non-empty square grid, got shape {arr.shape}")
    arr = arr.astype(np.complex128)
    if not np.all(np.isfinite(arr)):
        raise NonFiniteError("matrix entries must be finite")
    return arr


def make_matrix(kind, entries) -> SquareMatrix:
    """Validate ``entries`` and wrap them as a :class:`SquareMatrix`.

    Symmetry is checked exactly: ``entries[i, j] == conj(entries[j, i])``.
    Callers holding a matrix that is only symmetric up to rounding should use
    :func:`from_upper` instead.
    """
    kind = Kind.coerce(kind)
    arr = _check_grid(entries)
    if kind is Kind.REAL and np.any(arr.imag != 0):
        raise SymmetryViolation("real matrix has nonzero imaginary parts")
    if not np.array_equal(arr, arr.conj().T):
        i, j = np.argwhere(arr != arr.conj().T)[0]
        raise SymmetryViolation(f"entry ({i},{j}) is not the conjugate of ({j},{i})")
    return from_upper(kind, arr)


def from_upper(kind, entries) -> SquareMatrix:
    """Build a matrix from the upper triangle of ``entries``.

    The lower triangle is overwritten by the conjugate mirror and the imaginary
    part of the diagonal is dropped, so the result is exactly Hermitian.
    """
    kind = Kind.coerce(kind)
    arr = _check_grid(entries)
    if kind is Kind.REAL:
        if np.any(np.triu(arr).imag != 0):
            raise SymmetryViolation("real matrix has nonzero imaginary parts")
        arr = arr.real.astype(np.complex128)
    upper = np.triu(arr, 1)
    out = upper + upper.conj().T
    out[np.diag_indices_from(out)] = arr.diagonal().real
    return _freeze(kind, out)


def as_array(A) -> np.ndarray:
    """Return the entries of ``A`` (a SquareMatrix or array) as an ndarray."""
    if isinstance(A, SquareMatrix):
        return A.entries
    return np.asarray(A)


def _same_order(A: SquareMatrix, B: SquareMatrix):
    if A.n != B.n:
        raise DimensionMismatch(f"orders differ: {A.n} vs {B.n}")


def entrywise_l1(A) -> float:
    """Sum of the moduli of all entries."""
    return float(np.abs(as_array(A)).sum())


def entrywise_max(A) -> float:
    """Largest entry modulus."""
    return float(np.abs(as_array(A)).max())


def offdiag_max(A) -> float:
    """Largest modulus among the off-diagonal entries (0 for order 1)."""
    a = np.abs(as_array(A))
    n = a.shape[0]
    if n == 1:
        return 0.0
    return float(a[~np.eye(n, dtype=bool)].max())


def frobenius_norm(A) -> float:
    return float(np.linalg.norm(as_array(A)))


def frobenius_inner(A: SquareMatrix, B: SquareMatrix) -> float:
    """Frobenius inner product ``tr(A* B)``, real for Hermitian arguments."""
    _same_order(A, B)
    z = np.vdot(A.entries, B.entries)
    tol = 1e-12 * frobenius_norm(A) * frobenius_norm(B)
    assert abs(z.imag) <= tol + 1e-300, f"inner product has imaginary part {z.imag}"
    return float(z.real)


def hadamard(A: SquareMatrix, B: SquareMatrix) -> SquareMatrix:
    """Entrywise product ``(A o B)_ij = A_ij B_ij``.

    The entrywise product of two Hermitian matrices is again Hermitian, so no
    symmetrisation beyond mirroring away rounding is needed.
    """
    _same_order(A, B)
    kind = Kind.REAL if (A.kind is Kind.REAL and B.kind is Kind.REAL) else Kind.HERMITIAN
    return from_upper(kind, A.entries * B.entries)


def conjugate(A: SquareMatrix) -> SquareMatrix:
    """Entrywise complex conjugate (equal to the transpose for Hermitian A)."""
    return _freeze(A.kind, A.entries.conj())


def scale(A: SquareMatrix, c: float) -> SquareMatrix:
    if np.iscomplexobj(c) and np.imag(c) != 0:
        raise WrongKind("only real scalars preserve Hermitian symmetry")
    return _freeze(A.kind, A.entries * float(np.real(c)))


def add(A: SquareMatrix, B: SquareMatrix) -> SquareMatrix:
    _same_order(A, B)
    kind = Kind.REAL if (A.kind is Kind.REAL and B.kind is Kind.REAL) else Kind.HERMITIAN
    return _freeze(kind, A.entries + B.entries)


def diag_vector(A: SquareMatrix) -> np.ndarray:
    """The real diagonal ``(A_11, ..., A_nn)``."""
    return A.entries.diagonal().real.copy()


def subtract_diag(A: SquareMatrix, d) -> SquareMatrix:
    """``A - diag(d)`` for a real vector ``d``."""
    d = np.asarray(d, dtype=float)
    if d.shape != (A.n,):
        raise DimensionMismatch(f"diagonal of length {d.shape} for order {A.n}")
    out = A.entries.copy()
    out[np.diag_indices(A.n)] -= d
    return _freeze(A.kind, out)


def zero_diagonal_part(A: SquareMatrix) -> SquareMatrix:
    """``A`` with its diagonal replaced by zeros."""
    return subtract_diag(A, diag_vector(A))


def is_zero_diag(A: SquareMatrix, tol: float = 0.0) -> bool:
    return bool(np.all(np.abs(A.entries.diagonal()) <= tol))
