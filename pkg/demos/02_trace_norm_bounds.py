"""
Lower bounds on the trace norm
==============================

For a zero-diagonal real symmetric matrix the trace norm is at least 2/n
times the sum of the moduli of its entries; for Hermitian matrices the
factor drops to tan(pi / 2n).
"""

import math

import numpy as np

from tracenorm.bounds import bound_ratios, check_hermitian_bound, check_real_bound, gamma, seidel_min_energy
from tracenorm.extremal import herm_extremal, jn_minus_in
from tracenorm.sampling import random_matrices, random_matrix

# gamma_n links the two constants: tan(pi/2n) = (2/n) / gamma_n
for n in (2, 3, 4, 10, 100):
    g = gamma(n)
    print(n, g.by_sum, g.by_closed_form, (2 / n) / g.value, math.tan(math.pi / (2 * n)))
print("limit 4/pi =", 4 / math.pi)

# J_n - I_n sits exactly on the real bound
report = check_real_bound(jn_minus_in(6))
print(report.ratio, report.bound, report.is_equality)

# 1 1* - a a* (a = roots of unity) sits on the Hermitian bound
report = check_hermitian_bound(herm_extremal(6))
print(report.ratio, report.bound, report.is_equality)

# a random matrix clears the bound comfortably
print(check_real_bound(random_matrix("real", 6, "gaussian", seed=1)).as_dict())

# fuzz: 5000 seeded +-1 matrices of order 8
ratios = bound_ratios(random_matrices("real", 8, 5000, "pm_one", seed=2))
print("smallest ratio", ratios.min(), "bound", 2 / 8)

# minimum energy over all Seidel (+-1, zero diagonal) matrices, by enumeration
for n in range(2, 6):
    value, argmin = seidel_min_energy(n)
    print(n, round(value, 12), 2 * n - 2)
print(argmin.real)
