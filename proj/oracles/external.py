"""External product of two two-point triples, graded and ungraded."""

import json

import numpy as np

from common import load, matrix, triple

doc = load("two_point_pair.json")
g1, _, D1 = triple(doc)
D2 = matrix(doc["second_triple"]["dirac"])
n1, n2 = D1.shape[0], D2.shape[0]
I1, I2 = np.eye(n1), np.eye(n2)


def defect(T):
    return T @ T - np.kron(D1 @ D1, I2) - np.kron(I1, D2 @ D2)


graded = defect(np.kron(D1, I2) + np.kron(g1, D2))
ungraded = defect(np.kron(D1, I2) + np.kron(I1, D2))
print(json.dumps({
    "graded_defect_norm": float(np.linalg.norm(graded, 2)),
    "ungraded_defect_norm": float(np.linalg.norm(ungraded, 2)),
    "ungraded_equals_2_D1_D2": float(np.linalg.norm(ungraded - 2 * np.kron(D1, D2))),
}, indent=2))
