"""Three-point triple with two algebra projections in one grading eigenspace."""

import json

import numpy as np

from common import comm, form_dimensions, load, triple

gamma, basis, D = triple(load("three_point_junk.json"))
omega1, omega2, kernel, junk = form_dimensions(basis, D)

# Odd Dirac operator: D anticommutes with gamma.
odd = float(np.linalg.norm(gamma @ D + D @ gamma))
# E11 and E22 share the +1 eigenspace, so E11 D E22 vanishes and E11 [D, E22] = 0.
cross = float(np.linalg.norm(basis[1] @ comm(D, basis[2])))
# Junk from that vanishing: E11 delta(E22) -> E11 [D^2, E22].
witness = basis[1] @ comm(D @ D, basis[2])

print(json.dumps({
    "omega1_dimension": omega1,
    "omega2_dimension": omega2,
    "kernel_dimension": kernel,
    "junk_dimension": junk,
    "dirac_odd_residual": odd,
    "E11_commutator_E22_norm": cross,
    "junk_witness_norm": float(np.linalg.norm(witness)),
}, indent=2))
