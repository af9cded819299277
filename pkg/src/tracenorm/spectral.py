"""Hermitian eigendecomposition and the norms built on it.

The eigensolver is a cyclic complex Jacobi method.  Each sweep visits every
index pair once, in round-robin (tournament) order, so that the ``n // 2``
pairs of a round are disjoint and can be rotated together.  The same kernel
works on a stack of matrices of shape ``(..., n, n)``, which is what makes
the brute-force enumerations and fuzz suites in this package affordable.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .matcore import SquareMatrix, TraceNormError, _freeze, as_array

__all__ = [
    "ConvergenceFailure",
    "EigenDecomposition",
    "jacobi_eigh",
    "eigh",
    "eigvalsh",
    "trace_norm",
    "spectral_norm",
    "pos_neg_parts",
    "is_psd",
]

OFF_TOL = 1e-14
MAX_SWEEPS = 60
CHUNK = 512


class ConvergenceFailure(TraceNormError):
    pass


@dataclass(frozen=True)
class EigenDecomposition:
    """Eigenvalues in descending order and matching unit eigenvectors (columns)."""

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray

    def reconstruct(self) -> np.ndarray:
        V = self.eigenvectors
        return (V * self.eigenvalues) @ V.conj().T


def _round_robin(n):
    """Disjoint pair schedule covering every pair once (circle method)."""
    m = n + (n % 2)
    players = list(range(m))
    rounds = []
    for _ in range(m - 1):
        pairs = [(players[k], players[m - 1 - k]) for k in range(m // 2)]
        pairs = [(min(p, q), max(p, q)) for p, q in pairs if p < n and q < n]
        if pairs:
            rounds.append((np.array([p for p, _ in pairs]), np.array([q for _, q in pairs])))
        players = [players[0]] + [players[-1]] + players[1:-1]
    return rounds


def _offdiag_norm(H):
    n = H.shape[-1]
    mask = ~np.eye(n, dtype=bool)
    return np.sqrt((np.abs(H[..., mask]) ** 2).sum(axis=-1))


def jacobi_eigh(a, tol=OFF_TOL, max_sweeps=MAX_SWEEPS, vectors=True):
    """Eigenvalues and eigenvectors of a Hermitian matrix or stack of them.

    Parameters
    ----------
    a : array_like, shape (..., n, n)
        Hermitian input.  Only exact Hermitian input is meaningful; the
        strictly lower triangle is ignored and replaced by the mirror image
        of the upper one.
    tol : float
        Relative stopping threshold on the off-diagonal Frobenius mass.
    max_sweeps : int
    vectors : bool
        When False the rotations are not accumulated and ``V`` is None.

    Returns
    -------
    w : ndarray, shape (..., n)
        Eigenvalues, descending.
    V : ndarray, shape (..., n, n) or None
        Unitary matrix whose columns are the eigenvectors.
    """
    a = np.asarray(a, dtype=np.complex128)
    batch_shape = a.shape[:-2]
    n = a.shape[-1]
    flat = a.reshape((-1, n, n))
    w = np.empty(flat.shape[:2])
    V = np.empty(flat.shape, dtype=np.complex128) if vectors else None
    for lo in range(0, max(len(flat), 1), CHUNK):
        part = slice(lo, lo + CHUNK)
        wp, Vp = _jacobi_chunk(flat[part], tol, max_sweeps, vectors)
        w[part] = wp
        if vectors:
            V[part] = Vp
    w = w.reshape(batch_shape + (n,))
    return w, (V.reshape(batch_shape + (n, n)) if vectors else None)


def _jacobi_chunk(a, tol, max_sweeps, vectors):
    n = a.shape[-1]
    upper = np.triu(a, 1)
    H = upper + np.conj(np.swapaxes(upper, -1, -2))
    idx = np.arange(n)
    H[:, idx, idx] = a[:, idx, idx].real
    V = np.broadcast_to(np.eye(n, dtype=np.complex128), H.shape).copy() if vectors else None

    scale = np.linalg.norm(H, axis=(-2, -1))
    limit = tol * scale
    floor = 1e-18 * scale
    rounds = _round_robin(n)
    todo = np.flatnonzero(_offdiag_norm(H) > limit)
    sweeps = 0
    while todo.size:
        if sweeps == max_sweeps:
            raise ConvergenceFailure(
                f"Jacobi did not converge in {max_sweeps} sweeps "
                f"(off-diagonal mass {_offdiag_norm(H[todo]).max():.3e})"
            )
        # work on a compact copy of the matrices that still need rotations
        Hs = H[todo]
        Vs = V[todo] if vectors else None
        for P, Q in rounds:
            _rotate(Hs, Vs, P, Q, floor[todo])
        H[todo] = Hs
        if vectors:
            V[todo] = Vs
        sweeps += 1
        todo = todo[_offdiag_norm(Hs) > limit[todo]]

    w = H[:, idx, idx].real
    order = np.argsort(-w, axis=-1, kind="stable")
    w = np.take_along_axis(w, order, axis=-1)
    if vectors:
        V = np.take_along_axis(V, order[:, None, :], axis=-1)
    return w, V


def _rotate(H, V, P, Q, floor):
    # annihilate H[:, P, Q] for a set of disjoint pairs at once; entries at
    # or below ``floor`` are dropped without rotating, since rotating pure
    # roundoff between (near-)equal diagonal entries only regenerates it
    b = H[:, P, Q]
    absb = np.abs(b)
    active = absb > floor[:, None]
    absb = np.where(active, absb, 0.0)
    safe = np.where(active, absb, 1.0)
    # exact +-1 for real pivots so real input never acquires imaginary parts
    phase = np.where(b.imag == 0, np.where(b.real < 0, -1.0, 1.0), np.exp(1j * np.angle(b)))
    app = H[:, P, P].real
    aqq = H[:, Q, Q].real
    with np.errstate(over="ignore"):
        # a denormal |b| sends theta to inf, which correctly yields t = 0
        theta = (aqq - app) / (2.0 * safe)
        t = np.where(theta >= 0, 1.0, -1.0) / (np.abs(theta) + np.hypot(theta, 1.0))
    t = np.where(active, t, 0.0)
    c = 1.0 / np.sqrt(t * t + 1.0)
    s = t * c
    # U restricted to (p, q) is [[c, s*phase], [-s*conj(phase), c]]
    upq = s * phase
    uqp = -s * np.conj(phase)

    for M in (H, V) if V is not None else (H,):
        colP = M[:, :, P]
        colQ = M[:, :, Q]
        M[:, :, P] = colP * c[:, None, :] + colQ * uqp[:, None, :]
        M[:, :, Q] = colP * upq[:, None, :] + colQ * c[:, None, :]

    rowP = H[:, P, :]
    rowQ = H[:, Q, :]
    H[:, P, :] = rowP * c[:, :, None] + rowQ * np.conj(uqp)[:, :, None]
    H[:, Q, :] = rowP * np.conj(upq)[:, :, None] + rowQ * c[:, :, None]

    H[:, P, Q] = 0.0
    H[:, Q, P] = 0.0
    H[:, P, P] = app - t * absb
    H[:, Q, Q] = aqq + t * absb


def eigh(A, method="jacobi") -> EigenDecomposition:
    """Eigendecomposition of a single Hermitian matrix.

    ``method="lapack"`` delegates to :func:`numpy.linalg.eigh`; it is used as
    the fast path inside iterative solvers and as a cross-check in tests.
    """
    a = as_array(A)
    if method == "jacobi":
        w, V = jacobi_eigh(a)
    elif method == "lapack":
        w, V = np.linalg.eigh(a)
        w, V = w[::-1], V[:, ::-1]
    else:
        raise ValueError(f"unknown method {method!r}")
    return EigenDecomposition(np.ascontiguousarray(w), np.ascontiguousarray(V))


def eigvalsh(a, method="jacobi") -> np.ndarray:
    """Descending eigenvalues of a matrix or stack ``(..., n, n)``."""
    a = as_array(a)
    if method == "jacobi":
        return jacobi_eigh(a, vectors=False)[0]
    if method == "lapack":
        return np.linalg.eigvalsh(a)[..., ::-1]
    raise ValueError(f"unknown method {method!r}")


def _scalar_or_array(x):
    return float(x) if np.ndim(x) == 0 else x


def trace_norm(A, method="jacobi"):
    """Sum of absolute eigenvalues; vectorised over stacks."""
    return _scalar_or_array(np.abs(eigvalsh(A, method)).sum(axis=-1))


def spectral_norm(A, method="jacobi"):
    """Largest absolute eigenvalue; vectorised over stacks."""
    return _scalar_or_array(np.abs(eigvalsh(A, method)).max(axis=-1))


def pos_neg_parts(A: SquareMatrix, method="jacobi"):
    """Split ``A = A_plus - A_minus`` into its PSD positive and negative parts.

    Zero eigenvalues are assigned to the positive part.
    """
    dec = eigh(A, method)
    w, V = dec.eigenvalues, dec.eigenvectors
    pos = np.where(w >= 0, w, 0.0)
    neg = np.where(w < 0, -w, 0.0)
    plus = (V * pos) @ V.conj().T
    minus = (V * neg) @ V.conj().T
    kind = A.kind
    return _mirror(kind, plus), _mirror(kind, minus)


def _mirror(kind, arr):
    upper = np.triu(arr, 1)
    out = upper + upper.conj().T
    out[np.diag_indices_from(out)] = arr.diagonal().real
    if kind.value == "real":
        out = out.real.astype(np.complex128)
    return _freeze(kind, out)


def is_psd(A, tol=0.0, method="jacobi") -> bool:
    if tol < 0:
        raise ValueError("tol must be nonnegative")
    return bool(eigvalsh(A, method).min() >= -tol)
