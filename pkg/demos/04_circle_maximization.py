"""
Maximising a weighted sum of chord lengths
==========================================

F(d, w) = sum_ij d_i d_j |w_i - w_j| with d on the probability simplex and
w on the unit circle.  Its maximum is gamma_n, attained by uniform weights
on the n-th roots of unity.
"""

import numpy as np

from tracenorm.bounds import gamma
from tracenorm.lemma_opt import (
    SearchPoint,
    alternating_maximize,
    angle_gradient,
    conjectured_maximizer,
    d_step,
    f_value,
    grid_oracle,
    vector_inequality_sides,
)

p = conjectured_maximizer(6)
print(f_value(p), gamma(6).value)
print("gradient at the maximiser:", angle_gradient(p))

# for fixed angles the best weights solve a linear system
theta = np.array([0.0, 0.3, 0.9])
print(d_step(theta))

# multistart alternating ascent from random angles only
for n in range(2, 7):
    res = alternating_maximize(n, restarts=8, rng_seed=n, include_conjectured=False)
    print(n, res.value, gamma(n).value, res.structure_match)
print(np.round(res.best.theta / np.pi * n, 6))

# an exhaustive grid gives an independent lower bound
print(grid_oracle(3, 180), gamma(3).value)

# vector form: sum | |x_i x_j| - x_i conj(x_j) | <= gamma_n (sum |x_i|)^2
x = np.random.default_rng(0).standard_normal(6) * np.exp(1j * np.arange(6))
print(vector_inequality_sides(x))
