"""Shared generators for the test modules (numpy Generator based, seeded)."""

import numpy as np

from tracenorm.matcore import Kind, from_upper


def rng(seed=0):
    return np.random.default_rng(seed)


def random_herm(gen, n, kind="hermitian", zero_diag=False):
    a = gen.standard_normal((n, n))
    if kind == "hermitian":
        a = a + 1j * gen.standard_normal((n, n))
    if zero_diag:
        np.fill_diagonal(a, 0.0)
    return from_upper(kind, a)


def random_unitary(gen, n):
    z = gen.standard_normal((n, n)) + 1j * gen.standard_normal((n, n))
    q, r = np.linalg.qr(z)
    return q * (np.diag(r) / np.abs(np.diag(r)))


def gram(gen, n, rank=None, complex_=False):
    """A random PSD Gram matrix ``X X^*`` as a plain array."""
    rank = rank or n
    x = gen.standard_normal((n, rank))
    if complex_:
        x = x + 1j * gen.standard_normal((n, rank))
    return x @ x.conj().T


def psd_pair_equal_diag(gen, n, complex_=False):
    """Two PSD matrices with the same diagonal: rescale the second by
    ``S B S`` with ``S = diag(sqrt(dA / dB))``, which keeps it PSD."""
    a = gram(gen, n, int(gen.integers(1, n + 1)), complex_)
    b = gram(gen, n, int(gen.integers(1, n + 1)), complex_)
    s = np.sqrt(a.diagonal().real / b.diagonal().real)
    b = s[:, None] * b * s[None, :]
    np.fill_diagonal(b, a.diagonal())
    kind = Kind.HERMITIAN if complex_ else Kind.REAL
    return from_upper(kind, a), from_upper(kind, b)


def central_diff(f, x, h=1e-6):
    x = np.asarray(x, dtype=float)
    g = np.empty_like(x)
    for i in range(x.size):
        e = np.zeros_like(x)
        e[i] = h
        g[i] = (f(x + e) - f(x - e)) / (2 * h)
    return g
