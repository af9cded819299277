"""Nearest diagonal matrix in the spectral norm: ``min_d ||A - diag(d)||``.

The objective is convex and nonsmooth in ``d``.  :func:`solve` combines

* a smoothed phase: the spectral norm is replaced by
  ``mu * log sum_k (exp(lam_k / mu) + exp(-lam_k / mu))`` and minimised with
  L-BFGS for a decreasing sequence of ``mu``;
* a subgradient phase (Polyak steps against the best certificate, or
  diminishing ``c / sqrt(k)`` steps) started from the best smoothed point;
* weak-duality certificates.  For every Hermitian ``B`` with zero diagonal,
  ``<A, B> = <A - D, B> <= ||A - D|| ||B||_1``, so ``<A, B> / ||B||_1`` is a
  lower bound on the optimum.  Candidates are the zero-diagonal part of
  ``A`` and the spectral weight matrix of the smoothed objective, whose
  diagonal vanishes at a smoothed stationary point.

All eigenvalue work in the inner loops goes through LAPACK.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.optimize import minimize

from .matcore import (
    DimensionMismatch,
    Kind,
    NonZeroDiagonal,
    OrderTooLarge,
    SquareMatrix,
    ZeroMatrixError,
    entrywise_max,
    from_upper,
    is_zero_diag,
    offdiag_max,
)
from .sampling import SplitMix64
from .spectral import eigvalsh, trace_norm

__all__ = [
    "SolverOptions",
    "NearDiagResult",
    "objective",
    "subgradient",
    "dual_lower_bound",
    "spectral_certificate",
    "theorem_bound",
    "solve",
    "brute_oracle",
]

STALL_WINDOW = 50
STALL_RTOL = 1e-10
TIE_BAND = 1e-10
ORACLE_MIN_STEP = 1e-7


@dataclass(frozen=True)
class SolverOptions:
    max_iters: int = 5000
    tol: float = 1e-7
    restarts: int = 4
    step_rule: str = "polyak_with_lb"
    seed: int = 0

    def __post_init__(self):
        if self.max_iters < 1 or self.tol <= 0 or self.restarts < 1:
            raise ValueError("need max_iters >= 1, tol > 0, restarts >= 1")
        if self.step_rule not in ("polyak_with_lb", "diminishing"):
            raise ValueError(f"unknown step rule {self.step_rule!r}")


@dataclass
class NearDiagResult:
    d_star: np.ndarray
    value: float
    lower_bound: float
    gap: float
    iterations: int
    converged: bool
    certificate: SquareMatrix | None = None

    @property
    def n(self) -> int:
        return self.d_star.size


def _arr(A):
    return A.entries if isinstance(A, SquareMatrix) else np.asarray(A, dtype=np.complex128)


def _residual(a, d):
    m = a.copy()
    m[np.diag_indices_from(m)] -= d
    return m


def _check_d(a, d):
    d = np.asarray(d, dtype=float)
    if d.shape != (a.shape[0],):
        raise DimensionMismatch(f"diagonal of length {d.shape} for order {a.shape[0]}")
    return d


def objective(A, d, method="lapack") -> float:
    """``||A - diag(d)||_inf``."""
    a = _arr(A)
    d = _check_d(a, d)
    return float(np.abs(eigvalsh(_residual(a, d), method)).max())


def subgradient(A, d, tie_band=TIE_BAND) -> np.ndarray:
    """A subgradient of ``d -> ||A - diag(d)||_inf``.

    Uses the top eigenvector ``u`` when the largest eigenvalue dominates
    (``-|u|^2``), the bottom one ``v`` when the smallest does (``+|v|^2``),
    and their average when both are within ``tie_band`` (relative).
    """
    a = _arr(A)
    d = _check_d(a, d)
    w, V = np.linalg.eigh(_residual(a, d))
    lmax, lmin = w[-1], w[0]
    band = tie_band * max(abs(lmax), abs(lmin), np.finfo(float).tiny)
    up = -np.abs(V[:, -1]) ** 2
    down = np.abs(V[:, 0]) ** 2
    if lmax >= -lmin + band:
        return up
    if -lmin >= lmax + band:
        return down
    return 0.5 * (up + down)


def dual_lower_bound(A, B) -> float:
    """``<A, B> / ||B||_1`` for a zero-diagonal ``B``; never exceeds the optimum."""
    a, b = _arr(A), _arr(B)
    if a.shape != b.shape:
        raise DimensionMismatch(f"orders differ: {a.shape[0]} vs {b.shape[0]}")
    scale = np.abs(b).max() if b.size else 0.0
    if scale == 0:
        raise ZeroMatrixError("certificate must be nonzero")
    if not np.all(np.abs(np.diag(b)) <= 1e-12 * scale):
        raise NonZeroDiagonal("certificate must have a zero diagonal")
    b = b.copy()
    np.fill_diagonal(b, 0.0)
    tn = trace_norm(b, "lapack")
    return float(np.vdot(b, a).real / tn)


def _smoothed(a, d, mu):
    w, V = np.linalg.eigh(_residual(a, d))
    z = np.concatenate([w, -w]) / mu
    top = z.max()
    e = np.exp(z - top)
    s = e.sum()
    val = mu * (top + math.log(s))
    n = w.size
    weights = (e[:n] - e[n:]) / s
    grad = -((np.abs(V) ** 2) @ weights)
    return val, grad, weights, V


def spectral_certificate(A, d, mu):
    """Zero-diagonal certificate built from the smoothed spectral weights at ``d``.

    Returns ``(lower_bound, B)``; ``B`` is None when it degenerates to zero.
    """
    a = _arr(A)
    _, _, weights, V = _smoothed(a, np.asarray(d, dtype=float), mu)
    X = (V * weights) @ V.conj().T
    X = 0.5 * (X + X.conj().T)
    np.fill_diagonal(X, 0.0)
    if np.abs(X).max() == 0:
        return 0.0, None
    return dual_lower_bound(a, X), X


def theorem_bound(A: SquareMatrix) -> float:
    """``(n/2) max|a_ij|`` (real) or ``cot(pi/2n) max|a_ij|`` (Hermitian), i != j."""
    n = A.n
    if n == 1:
        return 0.0
    m = offdiag_max(A)
    if A.kind is Kind.REAL:
        return n / 2 * m
    return m / math.tan(math.pi / (2 * n))


def _polish(a, d, scale, iters):
    for mu in scale * 10.0 ** -np.arange(1, 10):
        res = minimize(
            lambda x: _smoothed(a, x, mu)[:2],
            d,
            jac=True,
            method="L-BFGS-B",
            options={"maxiter": 500, "gtol": 1e-13, "ftol": 1e-16},
        )
        d = res.x
        iters += res.nit
    return d, iters


class _Tracker:
    def __init__(self, a):
        self.a = a
        self.value = np.inf
        self.d = None
        self.lb = 0.0
        self.cert = None

    def offer(self, d):
        v = objective(self.a, d)
        if v < self.value:
            self.value, self.d = v, np.array(d, dtype=float)
        return v

    def certify(self, lb, B):
        if B is not None and lb > self.lb:
            self.lb, self.cert = lb, B

    @property
    def gap(self):
        return self.value - self.lb


def solve(A: SquareMatrix, opts: SolverOptions | None = None) -> NearDiagResult:
    """Minimise ``||A - diag(d)||_inf`` over real ``d``.

    Restarts begin at ``diag(A)``, ``0``, the spectral midpoint
    ``(lam_max + lam_min) / 2`` times ones, and seeded random points, and
    stop early once the certified gap is at most ``opts.tol``.
    """
    opts = opts or SolverOptions()
    a = _arr(A)
    n = a.shape[0]
    diag = a.diagonal().real.copy()
    off = a.copy()
    np.fill_diagonal(off, 0.0)
    if n == 1 or not np.any(off):
        return NearDiagResult(diag, 0.0, 0.0, 0.0, 0, True, None)

    kind = A.kind if isinstance(A, SquareMatrix) else Kind.HERMITIAN
    tr = _Tracker(a)
    tr.certify(dual_lower_bound(a, off), from_upper(kind, off))
    w = eigvalsh(a, "lapack")
    scale = float(np.abs(eigvalsh(off, "lapack")).max())
    mid = 0.5 * (w[0] + w[-1])
    rng = SplitMix64(opts.seed)
    starts = [diag, np.zeros(n), np.full(n, mid)]

    iterations = 0
    converged = False
    for r in range(opts.restarts):
        if r < len(starts):
            d0 = starts[r]
        else:
            d0 = mid + scale * (2.0 * rng.uniform(n) - 1.0)
        d, iterations = _polish(a, np.array(d0, dtype=float), scale, iterations)
        tr.offer(d)
        for mu in scale * 10.0 ** -np.arange(4, 10):
            lb, B = spectral_certificate(a, tr.d, mu)
            tr.certify(lb, None if B is None else from_upper(kind, B))
        iterations += _subgradient_phase(tr, opts, scale)
        if tr.gap <= opts.tol:
            converged = True
            break
    else:
        converged = tr.gap <= opts.tol

    return NearDiagResult(
        d_star=tr.d,
        value=tr.value,
        lower_bound=tr.lb,
        gap=tr.gap,
        iterations=iterations,
        converged=converged,
        certificate=tr.cert,
    )


def _subgradient_phase(tr, opts, scale):
    d = tr.d.copy()
    f = tr.value
    history = [tr.value]
    for k in range(1, opts.max_iters + 1):
        if tr.gap <= opts.tol:
            return k - 1
        g = subgradient(tr.a, d)
        gg = float(g @ g)
        if gg == 0.0:
            # zero subgradient certifies optimality of d
            tr.certify(f, tr.cert)
            return k
        if opts.step_rule == "polyak_with_lb" and tr.lb > 0:
            step = (f - tr.lb) / gg
        else:
            step = scale / math.sqrt(k)
        d = d - step * g
        f = tr.offer(d)
        history.append(tr.value)
        if k >= STALL_WINDOW and history[-STALL_WINDOW - 1] - tr.value <= STALL_RTOL * abs(tr.value):
            return k
    return opts.max_iters


def _small_spectral_norms(stack):
    """Spectral norms of Hermitian matrices of order <= 3 in closed form."""
    n = stack.shape[-1]
    d = stack[:, np.arange(n), np.arange(n)].real
    if n == 1:
        return np.abs(d[:, 0])
    if n == 2:
        mean = 0.5 * (d[:, 0] + d[:, 1])
        rad = np.hypot(0.5 * (d[:, 0] - d[:, 1]), np.abs(stack[:, 0, 1]))
        return np.abs(mean) + rad
    # trigonometric solution of the characteristic cubic
    a12, a13, a23 = stack[:, 0, 1], stack[:, 0, 2], stack[:, 1, 2]
    q = d.sum(axis=1) / 3
    p1 = np.abs(a12) ** 2 + np.abs(a13) ** 2 + np.abs(a23) ** 2
    c = d - q[:, None]
    p = np.sqrt(((c**2).sum(axis=1) + 2 * p1) / 6)
    safe = np.where(p > 0, p, 1.0)
    b = c / safe[:, None]
    det = (
        b[:, 0] * b[:, 1] * b[:, 2]
        + 2 * (a12 * a23 * np.conj(a13)).real / safe**3
        - (b[:, 0] * np.abs(a23) ** 2 + b[:, 1] * np.abs(a13) ** 2 + b[:, 2] * np.abs(a12) ** 2) / safe**2
    )
    phi = np.arccos(np.clip(det / 2, -1.0, 1.0)) / 3
    top = q + 2 * p * np.cos(phi)
    bottom = q + 2 * p * np.cos(phi + 2 * np.pi / 3)
    return np.maximum(np.abs(top), np.abs(bottom))


def brute_oracle(A, grid_points=None, passes=12, return_step=False):
    """Grid minimum of the objective for orders up to 3.

    The first grid covers ``[-w, w]^n`` with ``w = ||A|| + max|a_ij|``, which
    contains every minimiser.  The objective is 1-Lipschitz in the max-norm
    of ``d``, so the grid point nearest a minimiser is within ``h/2`` of the
    optimum (``h`` the largest spacing); each refinement therefore searches
    the bounding box of all points within ``h/2`` of the grid minimum,
    widened by one cell.  The returned value exceeds the optimum by at most
    ``h/2`` of the last pass; ``return_step=True`` also returns that ``h``.
    Refinement stops once ``h`` falls below ``ORACLE_MIN_STEP * w``: the
    closed-form 3x3 eigenvalues are only accurate to roughly
    ``sqrt(eps) * ||A||``, so a finer grid would resolve rounding noise.

    Spectral norms are evaluated in closed form, independently of both
    eigensolvers in this package.
    """
    a = _arr(A)
    n = a.shape[0]
    if n > 3:
        raise OrderTooLarge("brute-force oracle is limited to n <= 3")
    if grid_points is None:
        grid_points = {1: 201, 2: 201, 3: 61}[n]
    w = float(np.abs(eigvalsh(a, "lapack")).max()) + entrywise_max(a)
    lo, hi = np.full(n, -w), np.full(n, w)
    best = np.inf
    idx = np.arange(n)
    for _ in range(passes + 1):
        axes = [np.linspace(l, u, grid_points) for l, u in zip(lo, hi)]
        steps = (hi - lo) / (grid_points - 1)
        h = float(steps.max())
        mesh = np.stack(np.meshgrid(*axes, indexing="ij"), axis=-1).reshape(-1, n)
        stack = np.broadcast_to(a, (len(mesh), n, n)).copy()
        stack[:, idx, idx] -= mesh
        vals = _small_spectral_norms(stack)
        fmin = float(vals.min())
        best = min(best, fmin)
        if h < ORACLE_MIN_STEP * w:
            break
        near = mesh[vals <= fmin + 0.5 * h]
        lo = np.maximum(lo, near.min(axis=0) - steps)
        hi = np.minimum(hi, near.max(axis=0) + steps)
    return (best, h) if return_step else best
