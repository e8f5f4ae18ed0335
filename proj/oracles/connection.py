"""Free rank-two module over the two-point triple with a diagonal Hermitian connection."""

import json

import numpy as np

from common import comm, load, triple

doc = load("two_point_connection.json")
gamma, basis, D = triple(doc)
b2 = basis[1]
n = 2
I = np.eye(n)

Gamma = np.diag([1.0, -1.0])
P = np.eye(2 * n)
Dt = np.kron(Gamma, D)
# A_11 = i delta(b2), A_22 = -i/2 delta(b2); represented by [D, b2] and [D^2, b2].
coef = [1j, -0.5j]
A_D = np.zeros((2 * n, 2 * n), dtype=complex)
A_D2 = np.zeros((2 * n, 2 * n), dtype=complex)
for k, c in enumerate(coef):
    A_D[k * n:(k + 1) * n, k * n:(k + 1) * n] = c * comm(D, b2)
    A_D2[k * n:(k + 1) * n, k * n:(k + 1) * n] = c * comm(D @ D, b2)

M = P @ Dt @ P + A_D
N = P @ np.kron(np.eye(2), D @ D) @ P + A_D2
R = M @ M - N

S = np.zeros((2 * n, 2 * n), dtype=complex)
S[0:n, n:2 * n] = b2
S[n:2 * n, 0:n] = b2
R_S = (S + M) @ (S + M) - S @ S - N
anti = S @ M + M @ S

print(json.dumps({
    "R_diagonal": [R[i, i].real for i in range(2 * n)],
    "R_spectral_norm": float(np.linalg.norm(R, 2)),
    "R_selfadjoint_residual": float(np.linalg.norm(R - R.conj().T)),
    "correspondence_spectral_norm": float(np.linalg.norm(R_S, 2)),
    "decomposition_residual": float(np.linalg.norm(R_S - R - anti)),
    "anticommutator_ratio": float(np.linalg.norm(anti, 2) / (np.linalg.norm(S, 2) + 1.0)),
}, indent=2))
