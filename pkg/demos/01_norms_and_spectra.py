"""
Norms and spectra of small Hermitian matrices
=============================================

Matrices are immutable, carry a kind tag ("real" or "hermitian") and are
symmetric by construction.
"""

import numpy as np

from tracenorm.matcore import entrywise_l1, entrywise_max, frobenius_inner, from_upper, make_matrix
from tracenorm.spectral import eigh, pos_neg_parts, spectral_norm, trace_norm

# make_matrix checks symmetry exactly; from_upper mirrors the upper triangle
A = make_matrix("real", [[0, 1, 1], [1, 0, 1], [1, 1, 0]])
B = from_upper("hermitian", [[0, 1j, 2], [0, 0, -1j], [0, 0, 0]])
print(A, B)
print(B.entries)

# eigenvalues come back in descending order from a batched complex Jacobi solver
dec = eigh(A)
print("eigenvalues of J_3 - I_3:", dec.eigenvalues)
print("reconstruction error:", np.abs(dec.reconstruct() - A.entries).max())

# the trace norm sums |eigenvalues|, the spectral norm takes the largest one
print("trace norm", trace_norm(A), "spectral norm", spectral_norm(A))
print("entrywise l1", entrywise_l1(A), "entrywise max", entrywise_max(A))

# split into positive and negative parts: A = A+ - A-
plus, minus = pos_neg_parts(B)
print("A+ - A- == B:", np.allclose(plus.entries - minus.entries, B.entries))
print("<A+, A-> =", frobenius_inner(plus, minus))
# with a zero diagonal the two parts share their diagonal
print(np.diag(plus.entries).real, np.diag(minus.entries).real)
