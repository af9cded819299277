"""Maximising ``F(d, w) = sum_ij d_i d_j |w_i - w_j|`` over simplex x circle^n.

Points on the circle are parameterised as ``w_k = exp(2i theta_k)`` with
``theta_k`` in ``[0, pi)``, so that ``|w_i - w_j| = 2 |sin(theta_i - theta_j)|``
everywhere.  For fixed angles ``F`` is a quadratic form ``d^T A d`` whose
matrix ``A_ij = |w_i - w_j|`` is a Euclidean distance matrix, hence
conditionally negative definite: on the simplex it is concave and the
Lagrange condition ``A d = const * 1`` characterises its maximiser.  The
solver alternates that exact weight update with backtracking gradient
ascent in the angles.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .bounds import gamma
from .matcore import OrderTooLarge, TraceNormError
from .sampling import SplitMix64

__all__ = [
    "CoincidentAngles",
    "SearchPoint",
    "MaximizeResult",
    "canonicalize",
    "conjectured_maximizer",
    "f_value",
    "angle_gradient",
    "project_simplex",
    "d_step",
    "alternating_maximize",
    "grid_oracle",
    "verify_maximizer_structure",
    "vector_inequality_sides",
]

ANGLE_SEP = 1e-9
KICK = 1e-7


class CoincidentAngles(TraceNormError):
    pass


@dataclass(frozen=True)
class SearchPoint:
    d: np.ndarray
    theta: np.ndarray

    def __post_init__(self):
        d = np.asarray(self.d, dtype=float)
        theta = np.asarray(self.theta, dtype=float)
        if d.shape != theta.shape or d.ndim != 1:
            raise ValueError("d and theta must be vectors of the same length")
        if np.any(d < 0) or abs(d.sum() - 1.0) > 1e-12:
            raise ValueError("d must lie on the probability simplex")
        object.__setattr__(self, "d", d)
        object.__setattr__(self, "theta", theta)

    @property
    def n(self) -> int:
        return self.d.size

    @property
    def omega(self) -> np.ndarray:
        return np.exp(2j * self.theta)


@dataclass
class MaximizeResult:
    best: SearchPoint
    value: float
    restarts_used: int
    converged: bool
    structure_match: bool
    values: list = field(default_factory=list)

    @property
    def n(self) -> int:
        return self.best.n


def canonicalize(p: SearchPoint) -> SearchPoint:
    """Rotate so the smallest angle is 0, reduce mod pi and sort."""
    theta = np.mod(p.theta - p.theta.min(), np.pi)
    theta[np.isclose(theta, np.pi, rtol=0, atol=1e-15)] = 0.0
    order = np.argsort(theta, kind="stable")
    return SearchPoint(p.d[order], theta[order])


def conjectured_maximizer(n: int) -> SearchPoint:
    """Uniform weights on the n-th roots of unity."""
    return SearchPoint(np.full(n, 1.0 / n), np.pi * np.arange(n) / n)


def _dist_matrix(theta):
    return 2.0 * np.abs(np.sin(theta[:, None] - theta[None, :]))


def f_value(p: SearchPoint) -> float:
    return float(p.d @ _dist_matrix(p.theta) @ p.d)


def _min_separation(theta):
    if theta.size < 2:
        return np.inf
    diff = np.abs(np.sin(theta[:, None] - theta[None, :]))
    np.fill_diagonal(diff, np.inf)
    return float(diff.min())


def angle_gradient(p: SearchPoint) -> np.ndarray:
    """``dF/dtheta_i = 4 d_i sum_j d_j sgn(sin(theta_i - theta_j)) cos(theta_i - theta_j)``.

    Raises :class:`CoincidentAngles` where ``F`` has a kink.
    """
    if _min_separation(p.theta) < ANGLE_SEP:
        raise CoincidentAngles("gradient undefined for coincident points")
    delta = p.theta[:, None] - p.theta[None, :]
    K = np.sign(np.sin(delta)) * np.cos(delta)
    np.fill_diagonal(K, 0.0)
    return 4.0 * p.d * (K @ p.d)


def project_simplex(v) -> np.ndarray:
    """Euclidean projection onto ``{x >= 0, sum x = 1}`` (sort-based)."""
    v = np.asarray(v, dtype=float)
    u = np.sort(v)[::-1]
    css = np.cumsum(u) - 1.0
    k = np.arange(1, v.size + 1)
    rho = np.flatnonzero(u - css / k > 0)[-1]
    return np.maximum(v - css[rho] / (rho + 1), 0.0)


def d_step(theta, max_iters=5000) -> np.ndarray:
    """Best simplex weights for fixed angles.

    Solves ``A(w) x = 1``; a strictly positive solution, normalised, is the
    maximiser.  Otherwise falls back to projected gradient ascent from the
    uniform point.
    """
    theta = np.asarray(theta, dtype=float)
    n = theta.size
    A = _dist_matrix(theta)
    if n > 1:
        try:
            x = np.linalg.solve(A, np.ones(n))
        except np.linalg.LinAlgError:
            x = None
        if x is not None and np.all(np.isfinite(x)) and np.all(x > 0):
            return x / x.sum()
    d = np.full(n, 1.0 / n)
    lip = 2.0 * max(np.abs(np.linalg.eigvalsh(A)).max(), 1e-300)
    for _ in range(max_iters):
        new = project_simplex(d + (2.0 * A @ d) / lip)
        if np.abs(new - d).max() <= 1e-15:
            d = new
            break
        d = new
    return d


def _ascend_angles(d, theta, value, max_steps=1):
    """Backtracking gradient steps in the angles (Armijo constant 1e-4)."""
    for _ in range(max_steps):
        if _min_separation(theta) < ANGLE_SEP:
            theta = theta.copy()
            i = int(np.argmin(np.min(np.abs(np.sin(theta[:, None] - theta)) + np.eye(theta.size) * 9, axis=1)))
            theta[i] += KICK
            value = float(d @ _dist_matrix(theta) @ d)
        g = angle_gradient(SearchPoint(d, theta))
        gg = float(g @ g)
        if gg == 0.0:
            break
        step = 0.1
        while step > 1e-16:
            trial = theta + step * g
            tv = float(d @ _dist_matrix(trial) @ d)
            if tv >= value + 1e-4 * step * gg:
                theta, value = trial, tv
                break
            step *= 0.5
        else:
            break
    return theta, value


def _run(d, theta, max_iters, tol):
    value = float(d @ _dist_matrix(theta) @ d)
    for _ in range(max_iters):
        old = value
        nd = d_step(theta)
        nv = float(nd @ _dist_matrix(theta) @ nd)
        if nv >= value:
            d, value = nd, nv
        theta, value = _ascend_angles(d, theta, value, max_steps=5)
        if abs(value - old) <= tol:
            return d, theta, value, True
    return d, theta, value, False


def alternating_maximize(
    n: int,
    restarts: int = 32,
    rng_seed: int = 0,
    max_iters: int = 5000,
    tol: float = 1e-12,
    include_conjectured: bool = True,
    structure_tol: float = 1e-4,
) -> MaximizeResult:
    """Multistart alternating maximisation of ``F``.

    Random starts use uniform weights and i.i.d. uniform angles drawn from
    a SplitMix64 stream seeded with ``rng_seed``.  With
    ``include_conjectured`` an extra start at the roots-of-unity point is
    added.  Ties in value are broken by the lexicographically smallest
    canonical point.
    """
    if n < 1 or restarts < 1:
        raise ValueError("need n >= 1 and restarts >= 1")
    if n == 1:
        p = SearchPoint(np.ones(1), np.zeros(1))
        return MaximizeResult(p, 0.0, 1, True, True, [0.0])

    rng = SplitMix64(rng_seed)
    starts = [np.sort(rng.uniform(n) * np.pi) for _ in range(restarts)]
    if include_conjectured:
        starts.append(conjectured_maximizer(n).theta)

    best = None
    values = []
    for theta0 in starts:
        d0 = np.full(n, 1.0 / n)
        d, theta, value, conv = _run(d0, theta0, max_iters, tol)
        p = canonicalize(SearchPoint(d / d.sum(), theta))
        value = f_value(p)
        values.append(value)
        key = (-value, tuple(np.round(p.theta, 12)), tuple(np.round(p.d, 12)))
        if best is None or key < best[0]:
            best = (key, p, value, conv)
    _, p, value, conv = best
    return MaximizeResult(
        best=p,
        value=value,
        restarts_used=len(starts),
        converged=conv,
        structure_match=verify_maximizer_structure(p, structure_tol),
        values=values,
    )


def verify_maximizer_structure(p: SearchPoint, tol: float = 1e-6) -> bool:
    """Whether ``p`` is uniform weights on the n-th roots of unity.

    The check is up to rotation, reflection and relabelling: every point is
    tried as the anchor at angle 0, in both orientations.
    """
    n = p.n
    if np.abs(p.d - 1.0 / n).max() > tol:
        return False
    target = np.pi * np.arange(n) / n
    for s in range(n):
        for sign in (1.0, -1.0):
            th = np.mod(sign * (p.theta - p.theta[s]), np.pi)
            th[s] = 0.0
            th = np.sort(th)
            # angles just below pi belong next to the anchor at 0
            dev = np.minimum(np.abs(th - target), np.pi - np.abs(th - target))
            if dev.max() <= tol:
                return True
    return False


def grid_oracle(n: int, resolution: int = 180, simplex_divisions: int = 60) -> float:
    """Brute-force lower bound on ``max F`` for ``n`` in {2, 3}.

    Angles range over ``k pi / resolution`` with the first one fixed at 0;
    weights over the simplex grid with spacing ``1 / simplex_divisions``.
    Distances are evaluated from the complex points directly.
    """
    if n not in (2, 3):
        raise OrderTooLarge("grid oracle is limited to n = 2 or 3")
    if resolution < 1 or simplex_divisions < 1:
        raise ValueError("grid sizes must be positive")
    D = simplex_divisions
    grid = np.pi * np.arange(resolution) / resolution
    w = np.exp(2j * grid)
    if n == 2:
        d1 = np.arange(D + 1) / D
        pair = d1 * (1.0 - d1)
        dist = np.abs(1.0 - w)
        return float(2.0 * np.max(dist[:, None] * pair[None, :]))
    i, j = np.meshgrid(np.arange(D + 1), np.arange(D + 1), indexing="ij")
    keep = i + j <= D
    d1, d2 = i[keep] / D, j[keep] / D
    d3 = 1.0 - d1 - d2
    weights = np.stack([d1 * d2, d1 * d3, d2 * d3])  # pairs (12, 13, 23)
    a, b = np.triu_indices(resolution)
    dists = np.stack([np.abs(1.0 - w[a]), np.abs(1.0 - w[b]), np.abs(w[a] - w[b])], axis=1)
    best = 0.0
    for chunk in np.array_split(dists, max(1, len(dists) // 2048)):
        best = max(best, float((chunk @ weights).max()))
    return 2.0 * best


def vector_inequality_sides(x):
    """Both sides of ``sum_ij ||x_i x_j| - x_i conj(x_j)|  <=  gamma_n (sum |x_i|)^2``."""
    x = np.asarray(x, dtype=np.complex128)
    mod = np.abs(x)
    lhs = float(np.abs(np.outer(mod, mod) - np.outer(x, x.conj())).sum())
    rhs = gamma(x.size).value * float(mod.sum()) ** 2
    return lhs, rhs
