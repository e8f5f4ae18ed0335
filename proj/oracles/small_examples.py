"""Hand-sized values: kernels, ranks, graded commutators, norms."""

import json

import numpy as np
from scipy.linalg import null_space

from common import comm, load, triple

# Rank-one map on C^3 has a two-dimensional kernel.
u = np.array([[1.0], [2.0], [3.0]])
rank_one = u @ np.array([[1.0, -1.0, 0.5]])
kernel = null_space(rank_one)

# Odd part of a Hermitian matrix under gamma = diag(1, -1).
H = np.array([[1.0, 2 + 1j], [2 - 1j, 3.0]])
gamma = np.diag([1.0, -1.0])
odd = 0.5 * (H - gamma @ H @ gamma)

# Dirac operator of the two-point triple is not in the diagonal algebra.
_, basis, D = triple(load("two_point.json"))
A = np.column_stack([b.reshape(-1) for b in basis])
coords, *_ = np.linalg.lstsq(A, D.reshape(-1), rcond=None)
off_algebra = np.linalg.norm(A @ coords - D.reshape(-1)) / np.linalg.norm(D)

# Sum of one-forms b2 delta(b2) + delta(b2): pi_D gives b2 [D, b2] + [D, b2].
b2 = basis[1]
pi_sum = b2 @ comm(D, b2) + comm(D, b2)

print(json.dumps({
    "rank_one_kernel_dimension": kernel.shape[1],
    "rank_one_kernel_residual": float(np.linalg.norm(rank_one @ kernel)),
    "odd_part": [[str(complex(x)) for x in row] for row in odd],
    "dirac_algebra_residual": float(off_algebra),
    "pi_D_sum": pi_sum.real.tolist(),
    "dirac_squared": (D @ D).real.tolist(),
}, indent=2))
