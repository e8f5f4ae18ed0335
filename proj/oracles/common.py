"""Shared loading and brute-force linear algebra for the oracle scripts."""

import json
import pathlib

import numpy as np
from scipy.linalg import null_space

ROOT = pathlib.Path(__file__).resolve().parent.parent
RANK_TOL = 1e-9


def number(x):
    return complex(x[0], x[1]) if isinstance(x, list) else complex(x)


def matrix(rows):
    return np.array([[number(e) for e in row] for row in rows], dtype=complex)


def load(name):
    with open(ROOT / "scenarios" / name) as fh:
        return json.load(fh)


def triple(doc):
    t = doc["triple"]
    D = matrix(t["dirac"])
    gamma = np.diag(np.array(t["gamma_signs"], dtype=complex))
    basis = [matrix(b) for b in t["algebra_basis"]]
    return gamma, basis, D


def rank(mats, scale):
    """Numerical rank of the span of mats, cut at RANK_TOL * max(sigma_max, scale)."""
    if not mats:
        return 0
    A = np.column_stack([m.reshape(-1) for m in mats])
    s = np.linalg.svd(A, compute_uv=False)
    return int(np.sum(s > RANK_TOL * max(s[0], scale)))


def comm(a, b):
    return a @ b - b @ a


def form_dimensions(basis, D):
    """(dim Omega^1, dim Omega^2, dim ker, dim J^2) by direct enumeration."""
    d = len(basis)
    dnorm = np.linalg.norm(D, 2)
    one = [basis[k] @ comm(D, basis[j]) for k in range(d) for j in range(d)]
    two = [basis[k] @ comm(D, basis[i]) @ comm(D, basis[j]) for k in range(d) for i in range(d) for j in range(d)]
    # Columns indexed by (i, j): c -> (sum c b_i b_j, sum c b_i [D, b_j]).
    cols = []
    for j in range(d):
        for i in range(d):
            cols.append(np.concatenate([(basis[i] @ basis[j]).reshape(-1), (basis[i] @ comm(D, basis[j])).reshape(-1)]))
    L = np.column_stack(cols)
    K = null_space(L, rcond=RANK_TOL)
    D2 = D @ D
    junk = []
    for v in K.T:
        J = sum(v[i + d * j] * basis[i] @ comm(D2, basis[j]) for i in range(d) for j in range(d))
        junk.append(J)
    return (rank(one, dnorm), rank(two, dnorm**2), K.shape[1], rank(junk, dnorm**2))
