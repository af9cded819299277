"""
Matrices where the bounds are sharp
===================================
"""

import math

import numpy as np

from tracenorm.extremal import (
    block_identity_example,
    e_matrix,
    e_matrix_eigenvalues,
    herm_dual_extremal,
    herm_extremal,
    real_equality_family,
    roots_of_unity,
)
from tracenorm.matcore import entrywise_l1
from tracenorm.spectral import eigh, spectral_norm, trace_norm

n = 5
print(np.round(roots_of_unity(n), 3))

# trace norm 2n, entrywise l1 n^2 gamma_n
H = herm_extremal(n)
print(trace_norm(H), entrywise_l1(H))

# any balanced sign vector v gives the real family 1 1^T - v v^T
A = real_equality_family([1, -1, 1, -1])
print(A.real, trace_norm(A), entrywise_l1(A))

# E has i*sgn(i-j) off the diagonal and spectrum cot((2k-1) pi / 2n)
E = e_matrix(n)
print(eigh(E).eigenvalues)
print(e_matrix_eigenvalues(n))
print(spectral_norm(herm_dual_extremal(n)), 1 / math.tan(math.pi / (2 * n)))

# two-block fixture whose nearest diagonal matrix is n/2 away
print(block_identity_example(4).real)
