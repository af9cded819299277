"""Trace-norm versus entrywise-L1 bounds for zero-diagonal real symmetric and
Hermitian matrices, their extremal matrices, and the dual nearest-diagonal
problem."""

from .matcore import (
    Kind,
    SquareMatrix,
    TraceNormError,
    diag_vector,
    entrywise_l1,
    entrywise_max,
    frobenius_inner,
    from_upper,
    hadamard,
    is_zero_diag,
    make_matrix,
    subtract_diag,
)
from .spectral import eigh, is_psd, pos_neg_parts, spectral_norm, trace_norm
from .bounds import check_hermitian_bound, check_real_bound, gamma, seidel_min_energy
from .extremal import (
    block_identity_example,
    e_matrix,
    herm_dual_extremal,
    herm_extremal,
    jn_minus_in,
    real_equality_family,
)
from .lemma_opt import alternating_maximize, f_value, grid_oracle
from .neardiag import SolverOptions, solve
from .sampling import random_matrix

__version__ = "0.1.0"
