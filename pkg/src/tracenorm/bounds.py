"""Trace-norm lower bounds for zero-diagonal matrices and the constant gamma_n."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .matcore import (
    Kind,
    NonZeroDiagonal,
    OrderTooLarge,
    OrderTooSmall,
    SquareMatrix,
    WrongKind,
    ZeroMatrixError,
    entrywise_l1,
    entrywise_max,
    from_upper,
    is_zero_diag,
)
from .spectral import eigvalsh, trace_norm

__all__ = [
    "GammaValue",
    "BoundReport",
    "gamma",
    "real_bound_constant",
    "hermitian_bound_constant",
    "check_real_bound",
    "check_hermitian_bound",
    "bound_ratios",
    "seidel_min_energy",
    "seidel_matrix",
    "is_switching_equivalent",
    "EQUALITY_TOL",
    "VERDICT_TOL",
]

EQUALITY_TOL = 1e-9
VERDICT_TOL = 1e-9
ZERO_DIAG_RTOL = 1e-12
SEIDEL_MAX_ORDER = 6


@dataclass(frozen=True)
class GammaValue:
    n: int
    by_sum: float
    by_closed_form: float

    @property
    def value(self) -> float:
        return self.by_closed_form

    def __float__(self):
        return self.by_closed_form


def gamma(n: int) -> GammaValue:
    """``gamma_n = (2/n) sum_{k<n} sin(k pi / n) = 2 / (n tan(pi / 2n))``.

    Both forms are returned; the closed form is taken as 0 at ``n = 1``,
    where the sum is empty.
    """
    n = int(n)
    if n < 1:
        raise OrderTooSmall("gamma_n needs n >= 1")
    # numpy's pairwise summation keeps the rounding error near log2(n) ulps
    by_sum = 2.0 / n * float(np.sin(np.arange(n) * (math.pi / n)).sum())
    closed = 0.0 if n == 1 else 2.0 / (n * math.tan(math.pi / (2 * n)))
    return GammaValue(n, by_sum, closed)


def real_bound_constant(n: int) -> float:
    return 2.0 / n


def hermitian_bound_constant(n: int) -> float:
    return math.tan(math.pi / (2 * n))


@dataclass(frozen=True)
class BoundReport:
    """Outcome of checking one matrix against a trace-norm lower bound."""

    kind: Kind
    n: int
    trace_norm: float
    entrywise_l1: float
    ratio: float
    bound: float
    slack: float
    verdict: str
    is_equality: bool

    @property
    def passed(self) -> bool:
        return self.verdict == "pass"

    def as_dict(self) -> dict:
        d = dict(self.__dict__)
        d["kind"] = self.kind.value
        return d


def _validate(A: SquareMatrix):
    scale = entrywise_max(A)
    if scale == 0:
        raise ZeroMatrixError("the bound is about nonzero matrices")
    if not is_zero_diag(A, ZERO_DIAG_RTOL * scale):
        raise NonZeroDiagonal("matrix must have a zero diagonal")


def _report(A, bound, method):
    tn = trace_norm(A, method)
    l1 = entrywise_l1(A)
    ratio = tn / l1
    slack = ratio - bound
    verdict = "pass" if slack >= -VERDICT_TOL * bound else "fail"
    return BoundReport(
        kind=A.kind,
        n=A.n,
        trace_norm=tn,
        entrywise_l1=l1,
        ratio=ratio,
        bound=bound,
        slack=slack,
        verdict=verdict,
        is_equality=abs(slack) <= EQUALITY_TOL * bound,
    )


def check_real_bound(A: SquareMatrix, method="jacobi") -> BoundReport:
    """Compare ``||A||_1 / sum|a_ij|`` with ``2/n`` for real symmetric ``A``."""
    if A.kind is not Kind.REAL:
        raise WrongKind("the 2/n bound is for real symmetric matrices")
    _validate(A)
    return _report(A, real_bound_constant(A.n), method)


def check_hermitian_bound(A: SquareMatrix, method="jacobi") -> BoundReport:
    """Compare ``||A||_1 / sum|a_ij|`` with ``tan(pi / 2n)``."""
    _validate(A)
    return _report(A, hermitian_bound_constant(A.n), method)


def bound_ratios(stack, method="jacobi") -> np.ndarray:
    """``trace_norm / entrywise_l1`` for every matrix of a ``(count, n, n)`` stack."""
    stack = np.asarray(stack)
    tn = np.abs(eigvalsh(stack, method)).sum(axis=-1)
    l1 = np.abs(stack).sum(axis=(-2, -1))
    return tn / l1


def seidel_matrix(n: int, mask: int) -> np.ndarray:
    """Zero-diagonal symmetric +-1 matrix whose k-th upper-triangle entry
    (row-major) is -1 exactly when bit k of ``mask`` is set."""
    iu, ju = np.triu_indices(n, 1)
    bits = (mask >> np.arange(len(iu))) & 1
    out = np.zeros((n, n))
    out[iu, ju] = 1.0 - 2.0 * bits
    return out + out.T


def seidel_min_energy(n: int, method="jacobi"):
    """Minimum trace norm over all Seidel matrices of order ``n`` by enumeration.

    Returns ``(min_value, argmin)``; among minimisers (within 1e-9) the one
    with the smallest sign bitmask is returned.
    """
    n = int(n)
    if n < 2:
        raise OrderTooSmall("need n >= 2")
    if n > SEIDEL_MAX_ORDER:
        raise OrderTooLarge(f"exhaustive enumeration is capped at n = {SEIDEL_MAX_ORDER}")
    m = n * (n - 1) // 2
    masks = np.arange(2**m, dtype=np.int64)
    iu, ju = np.triu_indices(n, 1)
    bits = (masks[:, None] >> np.arange(m)) & 1
    stack = np.zeros((len(masks), n, n))
    stack[:, iu, ju] = 1.0 - 2.0 * bits
    stack = stack + np.swapaxes(stack, -1, -2)
    energies = np.abs(eigvalsh(stack, method)).sum(axis=-1)
    best = energies.min()
    winner = int(masks[np.flatnonzero(energies <= best + 1e-9)[0]])
    return float(best), from_upper(Kind.REAL, seidel_matrix(n, winner))


def is_switching_equivalent(A, B) -> bool:
    """Whether ``B = S A S`` for some diagonal sign matrix ``S``."""
    a = np.asarray(A.entries if isinstance(A, SquareMatrix) else A)
    b = np.asarray(B.entries if isinstance(B, SquareMatrix) else B)
    n = a.shape[0]
    if b.shape != a.shape:
        return False
    for mask in range(2 ** (n - 1)):
        s = 1.0 - 2.0 * ((mask >> np.arange(n)) & 1)
        if np.array_equal(s[:, None] * a * s[None, :], b):
            return True
    return False
