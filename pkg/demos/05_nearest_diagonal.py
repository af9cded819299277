"""
Distance to the nearest diagonal matrix
=======================================

min over real d of ||A - diag(d)|| in the spectral norm is at most
(n/2) max|a_ij| for real symmetric A and cot(pi/2n) max|a_ij| for
Hermitian A (off-diagonal entries only).
"""

import math

import numpy as np

from tracenorm.extremal import block_identity_example, e_matrix, ones_matrix
from tracenorm.matcore import from_upper
from tracenorm.neardiag import SolverOptions, brute_oracle, dual_lower_bound, objective, solve, theorem_bound
from tracenorm.sampling import random_matrix

# J_n: the optimum is d = n/2, certified by the zero-diagonal part of J_n
r = solve(ones_matrix(6))
print(r.value, r.lower_bound, r.gap, r.d_star)
print(dual_lower_bound(ones_matrix(6), from_upper("real", np.ones((6, 6)) - np.eye(6))))

# E: the zero diagonal is already optimal
r = solve(e_matrix(5))
print(r.value, 1 / math.tan(math.pi / 10), np.abs(r.d_star).max())

print(solve(block_identity_example(6)).value)

# random matrices stay under the bound
for seed in range(5):
    A = random_matrix("hermitian", 6, "gaussian", zero_diag=False, seed=seed)
    r = solve(A, SolverOptions(seed=seed))
    print(f"{r.value:.6f} <= {theorem_bound(A):.6f}  gap {r.gap:.1e}")

# for n <= 3 a brute-force grid search gives an independent answer
A = random_matrix("real", 3, "gaussian", zero_diag=False, seed=11)
value, step = brute_oracle(A, return_step=True)
print(solve(A).value, value, step)
print(objective(A, solve(A).d_star))
