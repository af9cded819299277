"""Seeded random matrices with a portable, documented generator.

The generator is SplitMix64.  With ``state_0 = seed`` the k-th output
(k = 1, 2, ...) is ``mix(seed + k * 0x9E3779B97F4A7C15 mod 2**64)`` where::

    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
    z = (z ^ (z >> 27)) * 0x94D049BB133111EB
    z =  z ^ (z >> 31)

Because the state advances by a constant, the stream can be produced in
vectorised blocks.  Derived variates:

* uniform ``u = (x >> 11) * 2**-53`` in [0, 1);
* standard normal via the cosine branch of Box-Muller, consuming two
  uniforms ``(u1, u2)``: ``sqrt(-2 ln(1 - u1)) * cos(2 pi u2)``;
* random sign: ``+1`` if the top bit of ``x`` is clear, else ``-1``;
* unit-disk point: ``sqrt(u1) * exp(2 pi i u2)`` (real part only on the
  diagonal).

Entries are drawn row by row over the upper triangle (the diagonal included
unless ``zero_diag``).  Hermitian Gaussian off-diagonal entries take the real
part first, then the imaginary part.
"""

from __future__ import annotations

import numpy as np

from .matcore import Kind, SquareMatrix, TraceNormError, from_upper

__all__ = ["SplitMix64", "random_matrix", "random_matrices", "DISTRIBUTIONS"]

GOLDEN = np.uint64(0x9E3779B97F4A7C15)
MIX1 = np.uint64(0xBF58476D1CE4E5B9)
MIX2 = np.uint64(0x94D049BB133111EB)
MASK64 = (1 << 64) - 1

DISTRIBUTIONS = ("gaussian", "pm_one", "unit_disk")


class SplitMix64:
    """SplitMix64 stream with explicit 64-bit state."""

    def __init__(self, seed=0):
        self.state = int(seed) & MASK64

    def next_u64(self, count) -> np.ndarray:
        k = np.arange(1, count + 1, dtype=np.uint64)
        with np.errstate(over="ignore"):
            z = np.uint64(self.state) + k * GOLDEN
            z = (z ^ (z >> np.uint64(30))) * MIX1
            z = (z ^ (z >> np.uint64(27))) * MIX2
        z = z ^ (z >> np.uint64(31))
        self.state = (self.state + count * int(GOLDEN)) & MASK64
        return z

    def uniform(self, count) -> np.ndarray:
        return (self.next_u64(count) >> np.uint64(11)).astype(np.float64) * 2.0**-53

    def normal(self, count) -> np.ndarray:
        u = self.uniform(2 * count).reshape(count, 2)
        return np.sqrt(-2.0 * np.log1p(-u[:, 0])) * np.cos(2.0 * np.pi * u[:, 1])

    def signs(self, count) -> np.ndarray:
        top = self.next_u64(count) >> np.uint64(63)
        return 1.0 - 2.0 * top.astype(np.float64)

    def unit_disk(self, count) -> np.ndarray:
        u = self.uniform(2 * count).reshape(count, 2)
        return np.sqrt(u[:, 0]) * np.exp(2j * np.pi * u[:, 1])


def _slots(n, zero_diag):
    iu, ju = np.triu_indices(n, 1 if zero_diag else 0)
    return iu, ju


def random_matrices(kind, n, count, distribution="gaussian", zero_diag=True, seed=0) -> np.ndarray:
    """A stack of ``count`` random matrices as a complex array ``(count, n, n)``.

    Matrix ``k`` of the stack consumes the k-th consecutive block of the
    stream, so ``random_matrices(..., count=1)`` reproduces
    :func:`random_matrix` for the same seed.
    """
    kind = Kind.coerce(kind)
    if n < 1:
        raise TraceNormError("order must be positive")
    if distribution not in DISTRIBUTIONS:
        raise TraceNormError(f"unknown distribution {distribution!r}")
    if distribution == "unit_disk" and kind is not Kind.HERMITIAN:
        raise TraceNormError("unit_disk entries are complex; use kind='hermitian'")
    rng = SplitMix64(seed)
    iu, ju = _slots(n, zero_diag)
    m = len(iu)
    off = iu != ju
    out = np.zeros((count, n, n), dtype=np.complex128)
    if m == 0:
        return out

    if distribution == "pm_one":
        vals = rng.signs(count * m).reshape(count, m).astype(np.complex128)
    elif distribution == "gaussian":
        if kind is Kind.REAL:
            vals = rng.normal(count * m).reshape(count, m).astype(np.complex128)
        else:
            # diagonal slots take one real variate, off-diagonal slots two
            width = np.where(off, 2, 1)
            raw = rng.normal(count * int(width.sum())).reshape(count, -1)
            starts = np.concatenate(([0], np.cumsum(width)[:-1]))
            vals = raw[:, starts].astype(np.complex128)
            vals[:, off] += 1j * raw[:, starts[off] + 1]
    else:
        # diagonal slots keep only the real part of their disk draw
        vals = rng.unit_disk(count * m).reshape(count, m)
        vals[:, ~off] = vals[:, ~off].real
    out[:, iu, ju] = vals
    out[:, ju[off], iu[off]] = np.conj(vals[:, off])
    return out


def random_matrix(kind, n, distribution="gaussian", zero_diag=True, seed=0) -> SquareMatrix:
    """One seeded random matrix; Hermitian symmetry holds by construction."""
    arr = random_matrices(kind, n, 1, distribution, zero_diag, seed)[0]
    return from_upper(kind, arr)
