"""Two-point triple and its projective module: form dimensions, curvature, C1/C2 norms."""

import json

import numpy as np

from common import comm, form_dimensions, load, matrix, triple

gamma, basis, D = triple(load("two_point.json"))
b2 = basis[1]
n = D.shape[0]

omega1, omega2, kernel, junk = form_dimensions(basis, D)

# Module p = diag(b2, 1 - b2) with Gamma = diag(1, -1).
mod = load("two_point_module.json")
signs = mod["module"]["grading"]
m = len(signs)
P = np.zeros((m * n, m * n), dtype=complex)
for k, row in enumerate(mod["module"]["p"]):
    for l, coords in enumerate(row):
        block = sum(complex(*c) if isinstance(c, list) else c * basis[i] for i, c in enumerate(coords))
        P[k * n:(k + 1) * n, l * n:(l + 1) * n] = block
Gamma = np.diag(np.array(signs, dtype=float))
Dt = np.kron(Gamma, D)
M = P @ Dt @ P
N = P @ np.kron(np.eye(m), D @ D) @ P
R = M @ M - N
# Formula route: P[D~,P][D~,P]P with A = 0.
dP = comm(Dt, P)
R_formula = P @ dP @ dP @ P

pi1 = np.block([[b2, np.zeros_like(b2)], [comm(D, b2), b2]])
res = np.linalg.inv(D + 1j * np.eye(n))


def pi2(a):
    return np.block([[(D + 1j * np.eye(n)) @ a @ res, np.zeros_like(a)], [comm(D @ D, a) @ res, a]])


c1 = np.linalg.norm(pi1, 2)
c2 = max(c1, np.linalg.norm(pi2(b2), 2), np.linalg.norm(pi2(b2.conj().T), 2))

J = np.array([[0, -1], [1, 0]], dtype=complex)
out = {
    "omega1_dimension": omega1,
    "omega2_dimension": omega2,
    "kernel_dimension": kernel,
    "junk_dimension": junk,
    "R_diagonal": [R[i, i].real for i in range(m * n)],
    "R_offdiagonal_max": float(np.max(np.abs(R - np.diag(np.diag(R))))),
    "R_spectral_norm": float(np.linalg.norm(R, 2)),
    "route_difference": float(np.linalg.norm(R - R_formula)),
    "c1_norm_b2": float(c1),
    "c2_norm_b2": float(c2),
    "pi_D_delta_b2": comm(D, b2).real.tolist(),
    "b2_commutator": (b2 @ comm(D, b2)).real.tolist(),
    "two_form_b2_delta_b2": (comm(D, b2) @ comm(D, b2)).real.tolist(),
    "graded_commutator_JJ": (J @ J + J @ J).real.tolist(),
    "spectral_norm_J": float(np.linalg.norm(J, 2)),
}
print(json.dumps(out, indent=2))
